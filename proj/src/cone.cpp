#include "kmstab/cone.hpp"

#include <algorithm>
#include <cmath>

namespace kmstab {

const char* status_name(SectorStatus s) {
    switch (s) {
        case SectorStatus::EmptyCone: return "EmptyCone";
        case SectorStatus::HitsZero: return "HitsZero";
        case SectorStatus::ContainsZero: return "ContainsZero";
        case SectorStatus::Sector: return "Sector";
    }
    return "?";
}

GaussRat evaluate(const Charge& z, const IntVec& v) {
    if (z.size() != v.size()) fail(ErrorKind::DimensionMismatch, "charge vs vector length");
    GaussRat s{0, 0};
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Rat c(v[i]);
        s.re += c * z[i].re;
        s.im += c * z[i].im;
    }
    return s;
}

Rat evaluate_real(const RatVec& zr, const IntVec& v) {
    if (zr.size() != v.size()) fail(ErrorKind::DimensionMismatch, "functional vs vector length");
    Rat s = 0;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s += Rat(v[i]) * zr[i];
    return s;
}

ConeApprox imaginary_generators(const Gcm& a, long long h, long long box_budget) {
    ConeApprox c{a, h, {}};
    for (auto& e : enumerate_roots(a, h, box_budget))
        if (e.cls.tag == RootTag::ImaginaryPositive && coords_gcd(e.coords) == 1)
            c.generators.push_back(std::move(e.coords));
    return c;
}

namespace {

using Dir = std::pair<Int, Int>;

// 0 on the closed upper half (positive x-axis included), 1 otherwise
int half(const Dir& u) {
    if (u.second > 0) return 0;
    if (u.second == 0 && u.first > 0) return 0;
    return 1;
}

bool angle_less(const Dir& a, const Dir& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Int c = cross(a, b);
    if (c != 0) return c > 0;
    return a < b; // keeps the order total; equal directions are deduplicated
}

double raw_phase(const Dir& u) {
    return std::atan2(u.second.convert_to<double>(), u.first.convert_to<double>()) / M_PI;
}

// scale with image = scale * dir, exact and positive
Rat dir_scale(const GaussRat& image, const Dir& dir) {
    return dir.first != 0 ? image.re / Rat(dir.first) : image.im / Rat(dir.second);
}

IntVec clear_denominators(const std::vector<std::pair<Rat, const IntVec*>>& combo, int n) {
    RatVec w(n, Rat(0));
    for (const auto& [c, g] : combo)
        for (int i = 0; i < n; ++i) w[i] += c * Rat((*g)[i]);
    Int lcm = 1;
    for (const auto& x : w) {
        Int d = denominator(x);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    IntVec out(n);
    for (int i = 0; i < n; ++i) out[i] = numerator(w[i] * Rat(lcm));
    Int g = coords_gcd(out);
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

} // namespace

SectorReport sector(const Charge& z, const ConeApprox& c) {
    SectorReport rep;
    if (c.generators.empty()) {
        rep.status = SectorStatus::EmptyCone;
        return rep;
    }

    // distinct image directions, each with one representative generator
    std::vector<Dir> dirs;
    std::vector<std::pair<GaussRat, const IntVec*>> rep_of; // image, generator
    for (const auto& g : c.generators) {
        GaussRat val = evaluate(z, g);
        if (val.is_zero()) {
            rep.status = SectorStatus::HitsZero;
            rep.witness = g;
            return rep;
        }
        Dir d = primitive_direction(val);
        bool known = false;
        for (const auto& e : dirs)
            if (e == d) {
                known = true;
                break;
            }
        if (!known) {
            dirs.push_back(d);
            rep_of.emplace_back(val, &g);
        }
    }

    // sort jointly by angle
    std::vector<size_t> order(dirs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return angle_less(dirs[x], dirs[y]); });

    const size_t m = order.size();
    const int n = int(z.size());

    if (m == 1) {
        rep.status = SectorStatus::Sector;
        rep.dmin = rep.dmax = dirs[order[0]];
        rep.phi1 = rep.phi2 = raw_phase(rep.dmin);
        if (rep.phi1 < 0) {
            rep.phi1 += 2;
            rep.phi2 += 2;
        }
        return rep;
    }

    // counterclockwise gap between consecutive directions: > pi iff cross < 0,
    // = pi iff antipodal. At most one gap can exceed pi.
    int big_gap_at = -1, antipodal_at = -1;
    for (size_t k = 0; k < m; ++k) {
        const Dir& u = dirs[order[k]];
        const Dir& v = dirs[order[(k + 1) % m]];
        Int cr = cross(u, v);
        if (cr < 0) big_gap_at = int(k);
        else if (cr == 0 && dot(u, v) < 0 && antipodal_at < 0) antipodal_at = int(k);
    }

    if (big_gap_at >= 0) {
        rep.status = SectorStatus::Sector;
        rep.dmin = dirs[order[(big_gap_at + 1) % m]];
        rep.dmax = dirs[order[big_gap_at]];
        double p1 = raw_phase(rep.dmin);
        double width = std::fmod(raw_phase(rep.dmax) - p1 + 2.0, 2.0);
        if (p1 < 0) p1 += 2;
        rep.phi1 = p1;
        rep.phi2 = p1 + width;
        return rep;
    }

    rep.status = SectorStatus::ContainsZero;
    if (antipodal_at >= 0) {
        size_t x = order[antipodal_at], y = order[(antipodal_at + 1) % m];
        Rat ax = dir_scale(rep_of[x].first, dirs[x]);
        Rat ay = dir_scale(rep_of[y].first, dirs[y]);
        // ay * image_x + ax * image_y = ax*ay*(u - u) = 0
        rep.witness = clear_denominators({{ay, rep_of[x].second}, {ax, rep_of[y].second}}, n);
    } else {
        // zero is a positive combination of three directions
        for (size_t i = 0; i < m && rep.witness.empty(); ++i)
            for (size_t j = i + 1; j < m && rep.witness.empty(); ++j)
                for (size_t k = j + 1; k < m; ++k) {
                    const Dir &ui = dirs[order[i]], &uj = dirs[order[j]], &uk = dirs[order[k]];
                    Int det = cross(uj, uk);
                    if (det == 0) continue;
                    Dir target{-ui.first, -ui.second};
                    // note Rat(p, q) requires q > 0; divide instead
                    Rat cj = Rat(cross(target, uk)) / Rat(det);
                    Rat ck = Rat(cross(uj, target)) / Rat(det);
                    if (cj < 0 || ck < 0) continue;
                    size_t xi = order[i], xj = order[j], xk = order[k];
                    Rat li = Rat(1) / dir_scale(rep_of[xi].first, ui);
                    Rat lj = cj / dir_scale(rep_of[xj].first, uj);
                    Rat lk = ck / dir_scale(rep_of[xk].first, uk);
                    rep.witness = clear_denominators({{li, rep_of[xi].second},
                                                      {lj, rep_of[xj].second},
                                                      {lk, rep_of[xk].second}},
                                                     n);
                    break;
                }
        if (rep.witness.empty()) fail(ErrorKind::Internal, "hull combination not found");
    }
    if (!evaluate(z, rep.witness).is_zero())
        fail(ErrorKind::Internal, "hull witness does not vanish");
    return rep;
}

namespace {

bool exactly_half_phase(const Dir& dmin, const Dir& dmax) {
    // sector symmetric about the imaginary axis and containing +i:
    // d_max positively parallel to -conj(d_min), and Re(d_min) >= 0
    Dir u{-dmin.first, dmin.second};
    return cross(dmax, u) == 0 && dot(dmax, u) > 0 && dmin.first >= 0;
}

PhaseCenter phase_center_of(const SectorReport& rep) {
    PhaseCenter pc;
    const Dir &a = rep.dmin, &b = rep.dmax;
    Dir sq{a.first * b.first - a.second * b.second, a.first * b.second + a.second * b.first};
    Int g = boost::multiprecision::gcd(abs(sq.first), abs(sq.second));
    if (g > 1) {
        sq.first /= g;
        sq.second /= g;
    }
    pc.bisector_sq = sq;
    double phi = (rep.phi1 + rep.phi2) / 2;
    while (phi > 2) phi -= 2;
    while (phi <= 0) phi += 2;
    pc.phi = phi;
    pc.exactly_half = exactly_half_phase(a, b);
    return pc;
}

// best rational approximation p/q of t with p*p + q*q <= prec, by convergents
std::pair<Int, Int> bounded_convergent(double t, const Int& prec) {
    Int p0 = 1, q0 = 0; // h_{-1}
    Int p1 = 0, q1 = 1; // h_{-2}... maintained as (prev, prevprev)
    Int best_p = 0, best_q = 1;
    bool have = false;
    double x = t;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(x);
        if (!(std::abs(fl) < 9e18)) break;
        Int a(static_cast<long long>(fl));
        Int p = a * p0 + p1;
        Int q = a * q0 + q1;
        if (q != 0 && p * p + q * q <= prec) {
            best_p = p;
            best_q = q;
            have = true;
        } else if (have) {
            break;
        }
        p1 = p0; p0 = p;
        q1 = q0; q0 = q;
        double frac = x - fl;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    if (!have) return {0, 0};
    if (best_q < 0) {
        best_p = -best_p;
        best_q = -best_q;
    }
    return {best_p, best_q};
}

} // namespace

PhaseCenter phase_center(const Charge& z, const ConeApprox& c) {
    SectorReport rep = sector(z, c);
    if (rep.status != SectorStatus::Sector)
        fail(ErrorKind::NotASector, "phase center requires a Sector image");
    return phase_center_of(rep);
}

NormalizeResult normalize(const Charge& z, const ConeApprox& c, const Int& prec, double tol) {
    SectorReport rep = sector(z, c);
    if (rep.status != SectorStatus::Sector)
        fail(ErrorKind::NotASector, "normalize requires a Sector image");
    PhaseCenter pc = phase_center_of(rep);
    if (pc.exactly_half) return {GaussRat{1, 0}, z};

    // rotation by pi * d with d = 1/2 - phi^I, reduced into (-1, 1]
    double d = 0.5 - pc.phi;
    while (d <= -1) d += 2;
    while (d > 1) d -= 2;

    GaussRat rot{-1, 0}; // fallback for d near +-1, where tan blows up
    double t = std::tan(M_PI * d / 2);
    auto [p, q] = bounded_convergent(t, prec);
    if (q != 0) {
        Rat den(p * p + q * q);
        GaussRat cand{Rat(q * q - p * p) / den, Rat(2 * p * q) / den};
        double cand_angle =
            std::atan2(cand.im.convert_to<double>(), cand.re.convert_to<double>()) / M_PI;
        double err_half = std::min(std::abs(d - 1.0), std::abs(d + 1.0));
        if (std::abs(cand_angle - d) <= err_half) rot = cand;
    }

    Charge rotated(z.size());
    for (size_t i = 0; i < z.size(); ++i) rotated[i] = rot * z[i];

    SectorReport rep2 = sector(rotated, c);
    if (rep2.status != SectorStatus::Sector)
        fail(ErrorKind::PrecisionExhausted, "rotated charge left the sector regime");
    PhaseCenter pc2 = phase_center_of(rep2);
    double offset = std::abs(pc2.phi - 0.5);
    if (offset > tol)
        fail(ErrorKind::PrecisionExhausted, "denominator bound too small for the tolerance");
    Verdict v = membership_X(c.gcm, rotated, c.height);
    if (v.certified_out)
        fail(ErrorKind::PrecisionExhausted, "rotated charge failed X membership");
    return {rot, rotated};
}

namespace {

Rat margin_term(const GaussRat& val, const IntVec& g) {
    Int h = height(g);
    return val.norm2() / Rat(h * h);
}

} // namespace

Verdict membership_X(const Gcm& a, const Charge& z, long long h, long long box_budget) {
    if (int(z.size()) != a.rank()) fail(ErrorKind::DimensionMismatch, "charge vs rank");
    ConeApprox c = imaginary_generators(a, h, box_budget);
    Verdict v;
    if (c.generators.empty()) return v; // finite type at this height: margin +infinity

    SectorReport rep = sector(z, c);
    if (rep.status != SectorStatus::Sector) {
        v.certified_out = true;
        v.witness = rep.witness;
        return v;
    }
    Rat best;
    bool first = true;
    for (const auto& g : c.generators) {
        Rat m = margin_term(evaluate(z, g), g);
        if (first || m < best) {
            best = m;
            first = false;
        }
    }
    v.margin2 = best;
    return v;
}

Verdict membership_Xreg(const Gcm& a, const Charge& z, long long h, long long box_budget) {
    Verdict v = membership_X(a, z, h, box_budget);
    if (v.certified_out) return v;
    for (const auto& e : enumerate_roots(a, h, box_budget)) {
        if (e.cls.tag != RootTag::RealPositive) continue;
        GaussRat val = evaluate(z, e.coords);
        if (val.is_zero()) {
            v.certified_out = true;
            v.witness = e.coords;
            v.margin2.reset();
            return v;
        }
        Rat m = margin_term(val, e.coords);
        if (!v.margin2 || m < *v.margin2) v.margin2 = m;
    }
    return v;
}

Rat support_margin(const Gcm& a, const Charge& z, long long h, long long box_budget) {
    if (int(z.size()) != a.rank()) fail(ErrorKind::DimensionMismatch, "charge vs rank");
    Rat best;
    bool first = true;
    for (const auto& e : enumerate_roots(a, h, box_budget)) {
        if (e.cls.tag == RootTag::ImaginaryPositive && coords_gcd(e.coords) != 1)
            continue; // divisible imaginary roots are not guaranteed semistable
        Rat m = margin_term(evaluate(z, e.coords), e.coords);
        if (first || m < best) {
            best = m;
            first = false;
        }
    }
    if (first) fail(ErrorKind::Internal, "no roots below height bound");
    return best;
}

} // namespace kmstab
