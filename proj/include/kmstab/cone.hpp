#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kmstab/gcm.hpp"
#include "kmstab/numeric.hpp"
#include "kmstab/roots.hpp"

namespace kmstab {

/// Z(v), evaluated exactly.
GaussRat evaluate(const Charge& z, const IntVec& v);
Rat evaluate_real(const RatVec& zr, const IntVec& v);

/// Inner approximation of the imaginary cone: one representative per ray of
/// indivisible positive imaginary roots up to the chosen height.
struct ConeApprox {
    Gcm gcm;
    long long height = 0;
    std::vector<IntVec> generators;
};

ConeApprox imaginary_generators(const Gcm& a, long long h,
                                long long box_budget = kDefaultBoxBudget);

enum class SectorStatus { EmptyCone, HitsZero, ContainsZero, Sector };

const char* status_name(SectorStatus s);

/// Image of the cone approximation under Z. Status decided by integer sign
/// tests only; the float phases are reporting sugar.
struct SectorReport {
    SectorStatus status = SectorStatus::EmptyCone;
    // Sector only: extremal directions as coprime integer pairs, phases in pi
    // units with phi1 <= phi2 < phi1 + 1.
    std::pair<Int, Int> dmin{0, 0};
    std::pair<Int, Int> dmax{0, 0};
    double phi1 = 0.0;
    double phi2 = 0.0;
    // HitsZero: the generator with Z = 0. ContainsZero: an integer vector in
    // the cone with Z = 0 (positive combination of at most three generators).
    IntVec witness;
};

SectorReport sector(const Charge& z, const ConeApprox& c);

/// Bisector data of a Sector image. The bisector itself is generally
/// irrational; its square d_min * d_max is exact.
struct PhaseCenter {
    std::pair<Int, Int> bisector_sq;
    double phi;         // in (0, 2], float approximation
    bool exactly_half;  // phi^I = 1/2, decided by sign tests
};

PhaseCenter phase_center(const Charge& z, const ConeApprox& c);

struct NormalizeResult {
    GaussRat rotation; // exact unit modulus
    Charge charge;     // rotation * z
};

/// Rotate z so that phi^I lands within tol of 1/2, using a Pythagorean
/// rational point on the unit circle with denominator <= prec.
NormalizeResult normalize(const Charge& z, const ConeApprox& c, const Int& prec,
                          double tol = 1e-6);

/// Membership verdict relative to the height-H approximation. Out is
/// unconditionally certified by the witness; In only says no excluded
/// hyperplane was found up to this height.
struct Verdict {
    bool certified_out = false;
    IntVec witness;             // certified-out ray / root
    std::optional<Rat> margin2; // in: min |Z(g)|^2 / ||g||_1^2; empty = +infinity
};

Verdict membership_X(const Gcm& a, const Charge& z, long long h,
                     long long box_budget = kDefaultBoxBudget);

Verdict membership_Xreg(const Gcm& a, const Charge& z, long long h,
                        long long box_budget = kDefaultBoxBudget);

/// Squared support-property margin: min |Z(alpha)|^2 / ||alpha||_1^2 over all
/// indivisible roots of height <= h (the guaranteed-semistable classes).
Rat support_margin(const Gcm& a, const Charge& z, long long h,
                   long long box_budget = kDefaultBoxBudget);

} // namespace kmstab
