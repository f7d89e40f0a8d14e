#include "kmstab/navigate.hpp"

#include <algorithm>
#include <set>

namespace kmstab {

namespace {

void coaction_step(const Gcm& a, int i, Charge& z) {
    const GaussRat zi = z[i];
    for (int j = 0; j < a.rank(); ++j) {
        const Int& c = a(i, j);
        if (c == 0) continue;
        Rat f(c);
        z[j].re -= f * zi.re;
        z[j].im -= f * zi.im;
    }
}

void coaction_step_real(const Gcm& a, int i, RatVec& zr) {
    const Rat zi = zr[i];
    for (int j = 0; j < a.rank(); ++j) {
        const Int& c = a(i, j);
        if (c != 0) zr[j] -= Rat(c) * zi;
    }
}

void check_word(const Gcm& a, const Word& w) {
    for (int l : w)
        if (l < 0 || l >= a.rank()) fail(ErrorKind::IndexOutOfRange, "word letter");
}

bool in_H(const GaussRat& v) { return v.im > 0 || (v.im == 0 && v.re < 0); }

} // namespace

Charge coaction(const Gcm& a, const Word& w, const Charge& z) {
    if (int(z.size()) != a.rank()) fail(ErrorKind::DimensionMismatch, "charge vs rank");
    check_word(a, w);
    Charge r = z;
    for (auto it = w.rbegin(); it != w.rend(); ++it) coaction_step(a, *it, r);
    return r;
}

RatVec coaction_real(const Gcm& a, const Word& w, const RatVec& zr) {
    if (int(zr.size()) != a.rank()) fail(ErrorKind::DimensionMismatch, "functional vs rank");
    check_word(a, w);
    RatVec r = zr;
    for (auto it = w.rbegin(); it != w.rend(); ++it) coaction_step_real(a, *it, r);
    return r;
}

TitsVerdict in_tits_cone(const Gcm& a, const RatVec& zr, long long h, long long box_budget) {
    if (int(zr.size()) != a.rank()) fail(ErrorKind::DimensionMismatch, "functional vs rank");
    if (classify(a).tag == CartanTag::Finite)
        return {TitsVerdict::Status::In, {}};
    bool zero = std::all_of(zr.begin(), zr.end(), [](const Rat& x) { return x == 0; });
    if (zero) return {TitsVerdict::Status::In, {}}; // the apex
    ConeApprox c = imaginary_generators(a, h, box_budget);
    for (const auto& g : c.generators)
        if (evaluate_real(zr, g) <= 0) return {TitsVerdict::Status::OutCertified, g};
    return {TitsVerdict::Status::InAtHeight, {}};
}

std::pair<Word, RatVec> dominant_word(const Gcm& a, RatVec zr, long long cap) {
    if (int(zr.size()) != a.rank()) fail(ErrorKind::DimensionMismatch, "functional vs rank");
    if (std::all_of(zr.begin(), zr.end(), [](const Rat& x) { return x == 0; }))
        fail(ErrorKind::ZeroVector, "dominant descent of the zero functional");
    std::vector<int> applied;
    for (;;) {
        int i = -1;
        for (int k = 0; k < a.rank(); ++k)
            if (zr[k] < 0) {
                i = k;
                break;
            }
        if (i < 0) break;
        if (static_cast<long long>(applied.size()) >= cap)
            fail(ErrorKind::CapExceeded, "dominant descent exceeded the step cap");
        coaction_step_real(a, i, zr);
        applied.push_back(i);
    }
    return {Word(applied.rbegin(), applied.rend()), std::move(zr)};
}

namespace {

// all positive roots of a finite-type GCM, by orbit closure from the simples
std::vector<IntVec> finite_positive_roots(const Gcm& a) {
    std::set<IntVec> roots;
    std::vector<IntVec> queue;
    for (int i = 0; i < a.rank(); ++i) {
        IntVec e(a.rank());
        e[i] = 1;
        roots.insert(e);
        queue.push_back(std::move(e));
    }
    while (!queue.empty()) {
        IntVec v = std::move(queue.back());
        queue.pop_back();
        for (int i = 0; i < a.rank(); ++i) {
            IntVec w = reflect(a, i, v);
            bool positive = true;
            for (const auto& x : w)
                if (x < 0) {
                    positive = false;
                    break;
                }
            if (positive && roots.insert(w).second) queue.push_back(std::move(w));
        }
    }
    return {roots.begin(), roots.end()};
}

} // namespace

std::pair<Word, RatVec> negative_chamber_word_finite(const Gcm& a, RatVec zr) {
    if (int(zr.size()) != a.rank()) fail(ErrorKind::DimensionMismatch, "functional vs rank");
    if (classify(a).tag != CartanTag::Finite)
        fail(ErrorKind::NotFiniteType, "negative-chamber descent needs finite type");
    auto roots = finite_positive_roots(a);
    for (const auto& r : roots)
        if (evaluate_real(zr, r) == 0)
            fail(ErrorKind::NotRegular, "functional vanishes on a root");

    // each step makes one more positive root negative, so |roots| bounds the walk
    std::vector<int> applied;
    for (;;) {
        int i = -1;
        for (int k = 0; k < a.rank(); ++k)
            if (zr[k] > 0) {
                i = k;
                break;
            }
        if (i < 0) break;
        if (applied.size() > roots.size())
            fail(ErrorKind::Internal, "negative-chamber descent failed to terminate");
        coaction_step_real(a, i, zr);
        applied.push_back(i);
    }
    return {Word(applied.rbegin(), applied.rend()), std::move(zr)};
}

LocateResult locate(const Gcm& a, const Charge& z, long long h, long long cap,
                    long long box_budget) {
    if (int(z.size()) != a.rank()) fail(ErrorKind::DimensionMismatch, "charge vs rank");
    if (classify(a).tag == CartanTag::Finite)
        fail(ErrorKind::PreconditionFailed, "locate requires affine or indefinite type");

    Verdict reg = membership_Xreg(a, z, h, box_budget);
    if (reg.certified_out) {
        if (is_real(classify_root(a, reg.witness)))
            fail(ErrorKind::NotRegular, "charge vanishes on a real root");
        fail(ErrorKind::InvariantViolation, "charge is outside X at this height");
    }
    ConeApprox c = imaginary_generators(a, h, box_budget);
    for (const auto& g : c.generators)
        if (evaluate(z, g).im <= 0)
            fail(ErrorKind::InvariantViolation,
                 "imaginary part not positive on the cone generators");

    RatVec zi(a.rank());
    for (int i = 0; i < a.rank(); ++i) zi[i] = z[i].im;
    auto [w_dom, zi_dom] = dominant_word(a, zi, cap);
    Charge cur = coaction(a, w_dom, z);
    Word total = w_dom;

    std::vector<int> J;
    for (int j = 0; j < a.rank(); ++j)
        if (cur[j].im == 0) J.push_back(j);

    if (!J.empty()) {
        IntMat sub(int(J.size()), int(J.size()));
        for (size_t x = 0; x < J.size(); ++x)
            for (size_t y = 0; y < J.size(); ++y) sub(int(x), int(y)) = a(J[x], J[y]);
        Gcm aj(sub);
        for (const auto& block : decompose(aj)) {
            std::vector<int> global(block.size());
            for (size_t x = 0; x < block.size(); ++x) global[x] = J[block[x]];
            IntMat bm(int(block.size()), int(block.size()));
            for (size_t x = 0; x < block.size(); ++x)
                for (size_t y = 0; y < block.size(); ++y)
                    bm(int(x), int(y)) = a(global[x], global[y]);
            Gcm ab(bm);
            if (classify(ab).tag != CartanTag::Finite)
                fail(ErrorKind::InvariantViolation, "real locus has a non-finite block");
            RatVec re(block.size());
            for (size_t x = 0; x < block.size(); ++x) re[x] = cur[global[x]].re;
            auto [w_local, re_neg] = negative_chamber_word_finite(ab, re);
            Word w_global;
            w_global.reserve(w_local.size());
            for (int l : w_local) w_global.push_back(global[l]);
            cur = coaction(a, w_global, cur);
            total.insert(total.begin(), w_global.begin(), w_global.end());
        }
    }

    for (const auto& v : cur)
        if (!in_H(v))
            fail(ErrorKind::InvariantViolation, "landed charge is not in the chamber");
    return {std::move(total), std::move(cur)};
}

std::optional<WallInfo> wall_of(const Gcm& a, const Charge& z) {
    if (int(z.size()) != a.rank()) fail(ErrorKind::DimensionMismatch, "charge vs rank");
    int real_at = -1;
    int reals = 0;
    for (int i = 0; i < a.rank(); ++i)
        if (z[i].im == 0) {
            ++reals;
            real_at = i;
        }
    if (reals >= 2) fail(ErrorKind::MultipleWalls, "two or more simple values are real");
    if (reals == 0) return std::nullopt;
    if (z[real_at].re == 0) return std::nullopt; // on a root hyperplane, not a wall
    for (int i = 0; i < a.rank(); ++i)
        if (i != real_at && z[i].im <= 0) return std::nullopt;
    return WallInfo{real_at, z[real_at].re > 0 ? 1 : -1};
}

CrossReport cross_path(const Gcm& a, const ChargePath& p, long long h,
                       long long box_budget, long long max_crossings) {
    const int n = a.rank();
    const auto& wp = p.waypoints;
    if (wp.size() < 2) fail(ErrorKind::PreconditionFailed, "path needs at least two waypoints");
    for (const auto& z : wp)
        if (int(z.size()) != n) fail(ErrorKind::DimensionMismatch, "waypoint vs rank");
    for (size_t k = 0; k + 1 < wp.size(); ++k)
        if (wp[k] == wp[k + 1])
            fail(ErrorKind::PreconditionFailed, "consecutive waypoints must be distinct");
    for (const auto& v : wp[0])
        if (v.im <= 0)
            fail(ErrorKind::PreconditionFailed, "first waypoint must lie in the open chamber");

    ConeApprox cone = imaginary_generators(a, h, box_budget);
    for (const auto& z : wp) {
        Verdict reg = membership_Xreg(a, z, h, box_budget);
        if (reg.certified_out)
            fail(ErrorKind::PreconditionFailed, "waypoint is outside X_reg at this height");
        for (const auto& g : cone.generators)
            if (evaluate(z, g).im <= 0)
                fail(ErrorKind::PreconditionFailed,
                     "waypoint imaginary part not positive on the cone generators");
    }

    CrossReport rep;
    Charge ya = wp[0]; // transformed segment endpoints under the running word
    Word tw;           // cumulative coaction word, latest letter first

    for (size_t seg = 0; seg + 1 < wp.size(); ++seg) {
        Charge yb = coaction(a, tw, wp[seg + 1]);
        // a value leaving H right at the segment start is a crossing at a
        // waypoint, which the sweep does not repair
        for (int i = 0; i < n; ++i)
            if (ya[i].im == 0 && yb[i].im < ya[i].im)
                fail(ErrorKind::PathTooDegenerate, "wall crossing at a segment endpoint");
        Rat t0 = 0;
        for (;;) {
            // earliest downward real-axis crossing after t0
            Rat best_t;
            int best_i = -1;
            bool tie = false;
            for (int i = 0; i < n; ++i) {
                const Rat ia = ya[i].im, ib = yb[i].im;
                if (ia <= ib || ib >= 0) continue; // not decreasing through zero before t=1
                Rat t = ia / (ia - ib);
                if (t <= t0 || t >= 1) continue;
                if (best_i < 0 || t < best_t) {
                    best_t = t;
                    best_i = i;
                    tie = false;
                } else if (t == best_t) {
                    tie = true;
                }
            }
            if (best_i < 0) break;
            if (tie)
                fail(ErrorKind::PathTooDegenerate, "two walls crossed at the same parameter");

            // value at the crossing; validate the single-wall condition
            GaussRat at_wall;
            for (int i = 0; i < n; ++i) {
                GaussRat v{(1 - best_t) * ya[i].re + best_t * yb[i].re,
                           (1 - best_t) * ya[i].im + best_t * yb[i].im};
                if (i == best_i) {
                    at_wall = v;
                } else if (v.im <= 0) {
                    fail(ErrorKind::PathTooDegenerate,
                         "crossing is not in the open part of the wall");
                }
            }
            if (at_wall.re == 0)
                fail(ErrorKind::PathTooDegenerate, "path meets a real-root hyperplane");
            const int side = at_wall.re > 0 ? 1 : -1;

            rep.word.letters.push_back({best_i, side});
            rep.crossings.push_back({int(seg), best_t, best_i, side});
            if (static_cast<long long>(rep.word.letters.size()) > max_crossings)
                fail(ErrorKind::CapExceeded, "crossing budget exhausted");

            tw.insert(tw.begin(), best_i);
            coaction_step(a, best_i, ya);
            coaction_step(a, best_i, yb);
            t0 = best_t;
        }
        // interior waypoints must land in the semiclosed chamber; W_{i,-} is
        // part of it, so a value on the negative real axis is a legal touch
        if (seg + 2 < wp.size())
            for (const auto& v : yb)
                if (!in_H(v))
                    fail(ErrorKind::PathTooDegenerate,
                         "interior waypoint left the base chamber");
        ya = std::move(yb);
    }

    rep.final_charge = ya;
    rep.verified = std::all_of(ya.begin(), ya.end(), in_H);
    rep.kmatrix = braid_to_kmatrix(a, rep.word).first;
    return rep;
}

namespace {

int lower_side(const std::pair<Int, Int>& u) {
    if (u.second > 0) return 0;
    if (u.second == 0 && u.first > 0) return 0;
    return 1;
}

} // namespace

long long loop_shift(const Gcm& a, const ChargePath& p, const ConeApprox& c) {
    const auto& wp = p.waypoints;
    if (wp.size() < 2 || wp.front() != wp.back())
        fail(ErrorKind::NotClosed, "loop must start and end at the same charge");

    std::vector<std::pair<Int, Int>> bsq, dmin, dmax;
    for (const auto& z : wp) {
        if (int(z.size()) != a.rank()) fail(ErrorKind::DimensionMismatch, "waypoint vs rank");
        SectorReport rep = sector(z, c);
        if (rep.status != SectorStatus::Sector)
            fail(ErrorKind::NotASector, "waypoint image is not a sector");
        std::pair<Int, Int> sq{rep.dmin.first * rep.dmax.first - rep.dmin.second * rep.dmax.second,
                               rep.dmin.first * rep.dmax.second + rep.dmin.second * rep.dmax.first};
        Int g = boost::multiprecision::gcd(abs(sq.first), abs(sq.second));
        if (g > 1) {
            sq.first /= g;
            sq.second /= g;
        }
        bsq.push_back(sq);
        dmin.push_back(rep.dmin);
        dmax.push_back(rep.dmax);
    }

    long long crossings = 0; // signed crossings of the real line by bisector^2
    for (size_t k = 0; k + 1 < bsq.size(); ++k) {
        const auto &u = bsq[k], &v = bsq[k + 1];
        Int c_ = cross(u, v);
        Int d_ = dot(u, v);
        if (c_ == 0 && d_ > 0) continue; // no angular movement
        int step;
        if (c_ != 0) {
            if (lower_side(u) == lower_side(v)) continue;
            step = c_ > 0 ? 1 : -1;
        } else {
            // exact half turn of bisector^2: orient by the extremal rays
            int rho = sign(cross(dmin[k], dmin[k + 1]));
            if (rho == 0) rho = sign(cross(dmax[k], dmax[k + 1]));
            if (rho == 0)
                fail(ErrorKind::PathTooDegenerate, "ambiguous half-turn between waypoints");
            step = rho;
        }
        crossings += step;
    }
    if (crossings % 2 != 0) fail(ErrorKind::Internal, "odd crossing count on a closed loop");
    return crossings / 2;
}

} // namespace kmstab
