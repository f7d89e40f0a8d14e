#pragma once

#include <optional>
#include <vector>

#include "kmstab/matrix.hpp"
#include "kmstab/numeric.hpp"

namespace kmstab::linalg {

/// Dense rational matrix, row major. Only what the exact solvers need.
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static RatMat from(const IntMat& m) {
        RatMat r(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
        return r;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

/// Exact inertia of a symmetric rational matrix via LDL^T elimination with
/// 1x1 diagonal pivots and hyperbolic 2x2 pivots when the diagonal vanishes.
Inertia symmetric_inertia(RatMat a);

/// Solve A x = b exactly. Empty optional iff A is singular.
std::optional<RatVec> solve(RatMat a, RatVec b);

/// Basis of the kernel of A (square or rectangular), exact.
std::vector<RatVec> kernel_basis(RatMat a);

/// Feasibility of { x >= 0, C x <= d }: phase-1 simplex with Bland's rule,
/// fully rational. Returns a feasible point or nothing.
std::optional<RatVec> feasible_point(const RatMat& c, const RatVec& d);

} // namespace kmstab::linalg
