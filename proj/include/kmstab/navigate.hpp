#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kmstab/braid.hpp"
#include "kmstab/cone.hpp"
#include "kmstab/gcm.hpp"
#include "kmstab/numeric.hpp"
#include "kmstab/roots.hpp"

namespace kmstab {

/// Contragredient action on charges: (r_i . Z)(alpha_j) = Z(alpha_j) - a_ij Z(alpha_i),
/// letters applied rightmost first. Satisfies (w.Z)(v) = Z(apply_word(w^-1, v)).
Charge coaction(const Gcm& a, const Word& w, const Charge& z);
RatVec coaction_real(const Gcm& a, const Word& w, const RatVec& zr);

struct TitsVerdict {
    enum class Status { In, InAtHeight, OutCertified } status;
    IntVec witness; // OutCertified: the imaginary generator with Zr(g) <= 0
};

/// Tits-cone test for a real functional. Finite type is all of V_R; otherwise
/// In is certified only relative to the height-h generators.
TitsVerdict in_tits_cone(const Gcm& a, const RatVec& zr, long long h,
                         long long box_budget = kDefaultBoxBudget);

/// Greedy descent to the dominant chamber: while some value at a simple root
/// is negative, reflect at the smallest such index. Returns the applied word
/// (coaction(word, zr) = result) and the dominant functional.
std::pair<Word, RatVec> dominant_word(const Gcm& a, RatVec zr, long long cap);

/// Finite type only: the unique w with all (w . zr)(alpha_i) < 0, by greedy
/// ascent. Requires zr regular (nonzero on every root).
std::pair<Word, RatVec> negative_chamber_word_finite(const Gcm& a, RatVec zr);

struct LocateResult {
    Word word;
    Charge charge; // coaction(word, input); every simple value in H
};

/// Send a regular charge into the fundamental chamber: dominant descent on the
/// imaginary part, then per finite block of the real locus J, descent of the
/// real part to the negative chamber.
LocateResult locate(const Gcm& a, const Charge& z, long long h, long long cap,
                    long long box_budget = kDefaultBoxBudget);

struct WallInfo {
    int i;    // 0-based generator
    int side; // +1 or -1
};

/// Base-wall test: exactly one simple value real (nonzero), the rest in the
/// open upper half plane. MultipleWalls if two or more values are real.
std::optional<WallInfo> wall_of(const Gcm& a, const Charge& z);

/// Piecewise-linear path through charge waypoints.
struct ChargePath {
    std::vector<Charge> waypoints;
};

struct Crossing {
    int segment; // 0-based: segment k joins waypoint k to k+1
    Rat t;       // parameter on that segment, in (0, 1)
    int i;       // 0-based generator
    int side;    // +1 crossed W_{i,+}, -1 crossed W_{i,-}
};

struct CrossReport {
    BraidWord word;  // letters in crossing order; shift 0
    IntMat kmatrix;  // braid_to_kmatrix(word)
    bool verified;   // final transformed waypoint lies in the base chamber
    std::vector<Crossing> crossings;
    Charge final_charge; // cumulative transform applied to the last waypoint
};

/// Sweep a path from the open base chamber, converting transversal wall
/// crossings of the transformed charge into braid letters: W_{i,+} appends
/// sigma_i, W_{i,-} appends sigma_i^-1.
CrossReport cross_path(const Gcm& a, const ChargePath& p, long long h,
                       long long box_budget = kDefaultBoxBudget,
                       long long max_crossings = 100000);

/// Shift degree of a closed path: twice the winding number of phi^I, counted
/// exactly on the bisector-squared directions.
long long loop_shift(const Gcm& a, const ChargePath& p, const ConeApprox& c);

} // namespace kmstab
