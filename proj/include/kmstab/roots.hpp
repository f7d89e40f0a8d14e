#pragma once

#include <vector>

#include "kmstab/gcm.hpp"
#include "kmstab/matrix.hpp"
#include "kmstab/numeric.hpp"

namespace kmstab {

inline constexpr long long kDefaultBoxBudget = 10'000'000;

/// Symmetric bilinear form v^T A w; equals the Euler form on K-theory classes.
Int pair_form(const Gcm& a, const IntVec& v, const IntVec& w);

/// Simple reflection r_i(v) = v - (v, alpha_i) alpha_i.
IntVec reflect(const Gcm& a, int i, const IntVec& v);

/// Apply a word: rightmost letter acts first (word = composite in writing order).
IntVec apply_word(const Gcm& a, const Word& w, const IntVec& v);

/// Fundamental set K: v in L_+ \ {0}, connected support, (v, alpha_i) <= 0 for all i.
bool in_fundamental_set(const Gcm& a, const IntVec& v);

enum class RootTag { RealPositive, RealNegative, ImaginaryPositive, ImaginaryNegative, NotARoot };

const char* tag_name(RootTag t);

/// Certificate of root membership. For positive tags, apply_word(witness, v)
/// is a simple root (real) or lies in K (imaginary); for negative tags it is
/// the negative of such a vector. Empty witness for NotARoot.
struct RootClass {
    RootTag tag;
    Word witness;
};

inline bool is_root(const RootClass& c) { return c.tag != RootTag::NotARoot; }
inline bool is_real(const RootClass& c) {
    return c.tag == RootTag::RealPositive || c.tag == RootTag::RealNegative;
}
inline bool is_imaginary(const RootClass& c) {
    return c.tag == RootTag::ImaginaryPositive || c.tag == RootTag::ImaginaryNegative;
}

/// Reflection descent: strictly height-decreasing walk to a simple root or
/// into the fundamental set, with the smallest eligible generator each step.
/// Total; never throws. Requires an indecomposable A for root semantics.
RootClass classify_root(const Gcm& a, const IntVec& v);

struct RootEntry {
    IntVec coords;
    RootClass cls;
};

/// All positive roots of height <= h, sorted by (height, lexicographic coords).
/// Scans the graded lattice box and classifies each point by descent; throws
/// BudgetExceeded when the box has more than box_budget points.
std::vector<RootEntry> enumerate_roots(const Gcm& a, long long h,
                                       long long box_budget = kDefaultBoxBudget);

/// Matrix of the word's composite on L: columns are images of the simple roots.
/// Satisfies M^T A M = A.
IntMat weyl_matrix(const Gcm& a, const Word& w);

inline Word inverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

} // namespace kmstab
