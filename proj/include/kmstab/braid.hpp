#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kmstab/gcm.hpp"
#include "kmstab/matrix.hpp"

namespace kmstab {

/// One braid generator with exponent +1 or -1. Generator indices 0-based.
struct BraidLetter {
    int gen;
    int exp;

    friend bool operator==(const BraidLetter& a, const BraidLetter& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
};

/// Word in the spherical-twist generators together with the even shift degree
/// (the Z[2] factor). Letters multiply left to right, rightmost acting first.
struct BraidWord {
    std::vector<BraidLetter> letters;
    long long shift = 0;
};

/// chi(v, w); identical to the bilinear form under K(D) ~ L.
Int euler_form(const Gcm& a, const IntVec& v, const IntVec& w);

/// K-action of the i-th spherical twist: v -> v - chi(alpha_i, v) alpha_i.
/// Self-inverse; equals weyl_matrix([i]).
IntMat twist_matrix(const Gcm& a, int i);

/// Product of twist matrices in word order (exponents do not matter on
/// K-theory); shift passes through.
std::pair<IntMat, long long> braid_to_kmatrix(const Gcm& a, const BraidWord& b);

struct RelationCheck {
    int i, j;          // 0-based pair
    Int a_ij;
    std::string kind;  // "commute", "braid" or "infinite-order"
    bool pass;
};

/// Verifies the commuting / braid matrix identities pairwise, and that
/// (r_i r_j)^k != 1 for k <= power_bound when a_ij <= -2.
std::vector<RelationCheck> check_braid_relations(const Gcm& a, int power_bound = 20);

/// Free reduction plus greedy braid/commutation rewrites, accepted only when
/// they shorten the word. Preserves the K-matrix and shift exactly; not a
/// normal form (braid-word equality is not decided).
BraidWord simplify(const Gcm& a, const BraidWord& b);

} // namespace kmstab
