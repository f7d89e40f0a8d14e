#pragma once

#include <initializer_list>
#include <vector>

#include "kmstab/error.hpp"
#include "kmstab/numeric.hpp"

namespace kmstab {

/// Dense integer matrix, row major.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    IntMat(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = int(rows.size());
        cols_ = rows_ ? int(rows.begin()->size()) : 0;
        a_.reserve(size_t(rows_) * cols_);
        for (const auto& r : rows) {
            if (int(r.size()) != cols_) fail(ErrorKind::DimensionMismatch, "ragged matrix literal");
            for (long long x : r) a_.emplace_back(x);
        }
    }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    friend IntMat operator*(const IntMat& x, const IntMat& y) {
        if (x.cols_ != y.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape");
        IntMat z(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const Int& v = x(i, k);
                if (v == 0) continue;
                for (int j = 0; j < y.cols_; ++j) z(i, j) += v * y(k, j);
            }
        return z;
    }

    IntVec apply(const IntVec& v) const {
        if (int(v.size()) != cols_) fail(ErrorKind::DimensionMismatch, "matrix/vector shape");
        IntVec w(rows_);
        for (int i = 0; i < rows_; ++i) {
            Int s = 0;
            for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
            w[i] = s;
        }
        return w;
    }

    IntMat transposed() const {
        IntMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    friend bool operator==(const IntMat& x, const IntMat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const IntMat& x, const IntMat& y) { return !(x == y); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

} // namespace kmstab
