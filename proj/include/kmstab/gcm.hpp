#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kmstab/matrix.hpp"
#include "kmstab/numeric.hpp"

namespace kmstab {

/// Loop-free quiver: vertex count plus an arrow multiset. Indices 0-based
/// internally; the JSON wire format is 1-based.
struct Quiver {
    int n = 0;
    std::vector<std::pair<int, int>> arrows;
};

/// Symmetric generalized Cartan matrix: 2 on the diagonal, non-positive
/// symmetric off-diagonal entries. Doubles as the bilinear form, the Euler
/// form and (via nonzero off-diagonal entries) the Dynkin diagram.
class Gcm {
public:
    Gcm() = default;
    /// Validates the GCM conditions; throws InvalidInput on violation.
    explicit Gcm(IntMat a);

    int rank() const { return n_; }
    const Int& operator()(int i, int j) const { return a_(i, j); }
    const IntMat& matrix() const { return a_; }

    /// Dynkin diagram adjacency: i ~ j iff a_ij != 0, i != j.
    bool adjacent(int i, int j) const { return i != j && a_(i, j) != 0; }

private:
    int n_ = 0;
    IntMat a_;
};

enum class CartanTag { Finite, Affine, Indefinite };

const char* tag_name(CartanTag t);

/// Classification certificate: a positive rational vector u with
/// Au > 0 (Finite), Au = 0 (Affine) or Au < 0 (Indefinite).
struct CartanType {
    CartanTag tag;
    RatVec witness;
};

/// A_ij = 2 delta_ij - (q_ij + q_ji). Rejects loops and disconnected quivers.
Gcm gcm_from_quiver(const Quiver& q);

/// Exact trichotomy of an indecomposable GCM via rational LDL^T inertia,
/// with a verified witness vector. Throws Decomposable on block matrices.
CartanType classify(const Gcm& a);

/// Connected components of the Dynkin diagram, each a sorted 0-based index set.
std::vector<std::vector<int>> decompose(const Gcm& a);

struct SupportInfo {
    std::vector<int> indices; // sorted, 0-based
    bool connected;
};

/// Support of v and connectivity of the induced full subgraph of the diagram.
SupportInfo support(const Gcm& a, const IntVec& v);

} // namespace kmstab
