#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

#include "kmstab/error.hpp"

namespace kmstab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Lattice vector in the simple-root basis.
using IntVec = std::vector<Int>;
/// Real linear functional on the root lattice: one rational value per simple root.
using RatVec = std::vector<Rat>;
/// Weyl word. Letters are 0-based generator indices; a word [i1,...,ik] denotes
/// the composite r_{i1} o ... o r_{ik}, so the rightmost letter acts first.
using Word = std::vector<int>;

/// Complex number with exact rational real and imaginary parts.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return {re, -im}; }
    Rat norm2() const { return re * re + im * im; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator*(const Rat& c, const GaussRat& a) {
        return {c * a.re, c * a.im};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

/// Central charge: z_i = Z(alpha_i), extended linearly to the whole lattice.
using Charge = std::vector<GaussRat>;

inline Int height(const IntVec& v) {
    Int h = 0;
    for (const auto& c : v) h += c;
    return h;
}

inline bool is_zero_vec(const IntVec& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

/// gcd of all coordinates (0 for the zero vector).
Int coords_gcd(const IntVec& v);

/// "p/q" or "p" with optional sign; also the only formats emitted.
Rat parse_rational(const std::string& s);

/// Canonical form: lowest terms, positive denominator, "/1" omitted.
std::string format_rational(const Rat& r);

/// Human-readable complex like "3+2i", "-2", "i", "1/2-3/4i".
std::string format_gauss(const GaussRat& z);

/// Direction of a nonzero z as a coprime integer pair (positive scale of z).
std::pair<Int, Int> primitive_direction(const GaussRat& z);

inline int sign(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sign(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

/// cross(a, b) > 0 iff b lies counterclockwise of a (within a half turn).
inline Int cross(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) {
    return a.first * b.second - a.second * b.first;
}
inline Int dot(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) {
    return a.first * b.first + a.second * b.second;
}

} // namespace kmstab
