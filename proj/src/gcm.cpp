#include "kmstab/gcm.hpp"

#include <algorithm>
#include <queue>

#include "kmstab/linalg.hpp"

namespace kmstab {

const char* tag_name(CartanTag t) {
    switch (t) {
        case CartanTag::Finite: return "Finite";
        case CartanTag::Affine: return "Affine";
        case CartanTag::Indefinite: return "Indefinite";
    }
    return "?";
}

Gcm::Gcm(IntMat a) : n_(a.rows()), a_(std::move(a)) {
    if (a_.cols() != n_ || n_ < 1)
        fail(ErrorKind::InvalidInput, "GCM must be square and nonempty");
    for (int i = 0; i < n_; ++i) {
        if (a_(i, i) != 2) fail(ErrorKind::InvalidInput, "GCM diagonal entry must be 2");
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            if (a_(i, j) > 0)
                fail(ErrorKind::InvalidInput, "GCM off-diagonal entry must be <= 0");
            if (a_(i, j) != a_(j, i))
                fail(ErrorKind::InvalidInput, "GCM must be symmetric");
        }
    }
}

namespace {

// Components of an undirected graph given by an adjacency predicate.
template <typename Adj>
std::vector<std::vector<int>> components(int n, const std::vector<int>& verts, Adj adj) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(n, false);
    for (int start : verts) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(start);
        seen[start] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : verts)
                if (!seen[v] && adj(u, v)) {
                    seen[v] = true;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

RatVec mat_apply(const Gcm& a, const RatVec& u) {
    RatVec r(a.rank());
    for (int i = 0; i < a.rank(); ++i) {
        Rat s = 0;
        for (int j = 0; j < a.rank(); ++j) s += Rat(a(i, j)) * u[j];
        r[i] = s;
    }
    return r;
}

bool witness_ok(const Gcm& a, CartanTag tag, const RatVec& u) {
    if (int(u.size()) != a.rank()) return false;
    for (const auto& x : u)
        if (x <= 0) return false;
    RatVec au = mat_apply(a, u);
    for (const auto& x : au) {
        switch (tag) {
            case CartanTag::Finite:
                if (x <= 0) return false;
                break;
            case CartanTag::Affine:
                if (x != 0) return false;
                break;
            case CartanTag::Indefinite:
                if (x >= 0) return false;
                break;
        }
    }
    return true;
}

} // namespace

Gcm gcm_from_quiver(const Quiver& q) {
    if (q.n < 1) fail(ErrorKind::InvalidInput, "quiver needs at least one vertex");
    IntMat a(q.n, q.n);
    for (int i = 0; i < q.n; ++i) a(i, i) = 2;
    for (auto [s, t] : q.arrows) {
        if (s < 0 || s >= q.n || t < 0 || t >= q.n)
            fail(ErrorKind::InvalidInput, "arrow endpoint out of range");
        if (s == t) fail(ErrorKind::Loop, "quiver has a loop");
        a(s, t) -= 1;
        a(t, s) -= 1;
    }
    std::vector<int> all(q.n);
    for (int i = 0; i < q.n; ++i) all[i] = i;
    auto comps = components(q.n, all, [&](int u, int v) { return u != v && a(u, v) != 0; });
    if (comps.size() > 1) fail(ErrorKind::Disconnected, "quiver is disconnected");
    return Gcm(std::move(a));
}

std::vector<std::vector<int>> decompose(const Gcm& a) {
    std::vector<int> all(a.rank());
    for (int i = 0; i < a.rank(); ++i) all[i] = i;
    return components(a.rank(), all, [&](int u, int v) { return a.adjacent(u, v); });
}

CartanType classify(const Gcm& a) {
    if (decompose(a).size() > 1)
        fail(ErrorKind::Decomposable, "classify requires an indecomposable GCM");
    const int n = a.rank();
    auto inertia = linalg::symmetric_inertia(linalg::RatMat::from(a.matrix()));

    CartanType result;
    if (inertia.negative == 0 && inertia.zero == 0) {
        // positive definite; A^-1 has positive entries, so A u = 1 has u > 0
        auto u = linalg::solve(linalg::RatMat::from(a.matrix()), RatVec(n, Rat(1)));
        if (!u) fail(ErrorKind::Internal, "definite matrix reported singular");
        result = {CartanTag::Finite, *u};
    } else if (inertia.negative == 0 && inertia.zero == 1) {
        auto basis = linalg::kernel_basis(linalg::RatMat::from(a.matrix()));
        if (basis.size() != 1) fail(ErrorKind::Internal, "affine kernel dimension mismatch");
        RatVec u = basis[0];
        // primitive integer form, positive orientation
        Int lcm = 1;
        for (const auto& x : u) {
            Int d = denominator(x);
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
        IntVec w(n);
        for (int i = 0; i < n; ++i) w[i] = numerator(u[i] * Rat(lcm));
        Int g = coords_gcd(w);
        int sgn = 0;
        for (const auto& x : w)
            if (x != 0) {
                sgn = x > 0 ? 1 : -1;
                break;
            }
        for (int i = 0; i < n; ++i) u[i] = Rat(w[i] * sgn, g);
        result = {CartanTag::Affine, u};
    } else if (inertia.negative == 0) {
        fail(ErrorKind::Internal, "positive semidefinite GCM with corank >= 2 cannot be indecomposable");
    } else {
        // witness by exact LP feasibility on { u >= 1, A u <= -1 }: substitute
        // u = 1 + x and solve { x >= 0, A x <= -1 - A 1 }
        auto am = linalg::RatMat::from(a.matrix());
        RatVec b(n);
        for (int i = 0; i < n; ++i) {
            Rat row_sum = 0;
            for (int j = 0; j < n; ++j) row_sum += Rat(a(i, j));
            b[i] = Rat(-1) - row_sum;
        }
        auto x = linalg::feasible_point(am, b);
        if (!x) fail(ErrorKind::Internal, "indefinite witness LP infeasible");
        RatVec u(n);
        for (int i = 0; i < n; ++i) u[i] = Rat(1) + (*x)[i];
        result = {CartanTag::Indefinite, u};
    }

    if (!witness_ok(a, result.tag, result.witness))
        fail(ErrorKind::Internal, "classification witness failed verification");
    return result;
}

SupportInfo support(const Gcm& a, const IntVec& v) {
    if (int(v.size()) != a.rank()) fail(ErrorKind::DimensionMismatch, "support dimension");
    if (is_zero_vec(v)) fail(ErrorKind::ZeroVector, "support of the zero vector");
    SupportInfo info;
    for (int i = 0; i < a.rank(); ++i)
        if (v[i] != 0) info.indices.push_back(i);
    auto comps = components(a.rank(), info.indices,
                            [&](int u, int w) { return a.adjacent(u, w); });
    info.connected = comps.size() == 1;
    return info;
}

} // namespace kmstab
