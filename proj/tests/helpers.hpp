#pragma once

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "kmstab/gcm.hpp"
#include "kmstab/numeric.hpp"
#include "kmstab/roots.hpp"

namespace kmstab::testing {

inline Gcm gcm(std::initializer_list<std::initializer_list<long long>> rows) {
    return Gcm(IntMat(rows));
}

inline Gcm kronecker(int arrows) { // rank 2, a_12 = -arrows
    IntMat m(2, 2);
    m(0, 0) = m(1, 1) = 2;
    m(0, 1) = m(1, 0) = -arrows;
    return Gcm(std::move(m));
}

inline Gcm a1hat() { return kronecker(2); }
inline Gcm a2() { return kronecker(1); }

/// simply-laced GCM from an undirected edge list
inline Gcm from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 2;
    for (auto [u, v] : edges) {
        m(u, v) -= 1;
        m(v, u) -= 1;
    }
    return Gcm(std::move(m));
}

inline Gcm path_graph(int n) { // type A_n
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

inline Gcm cycle_graph(int n) { // affine A^{n-1}, n >= 3
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n - 1, 0);
    return from_edges(n, e);
}

inline Gcm d_graph(int n) { // type D_n, n >= 4: path on 0..n-2, leaf n-1 at n-3
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n - 3, n - 1);
    return from_edges(n, e);
}

inline Gcm e_graph(int n) { // E_6, E_7, E_8: path on 0..n-2, leaf n-1 at vertex 2
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(2, n - 1);
    return from_edges(n, e);
}

inline IntVec vec(std::initializer_list<long long> xs) {
    IntVec v;
    for (long long x : xs) v.emplace_back(x);
    return v;
}

inline GaussRat gr(long long re, long long im) { return {Rat(re), Rat(im)}; }

/// A corpus of indecomposable GCMs of rank <= 4 covering all three types.
inline std::vector<Gcm> corpus() {
    return {
        a2(),                                      // finite A2
        path_graph(3),                             // finite A3
        path_graph(4),                             // finite A4
        d_graph(4),                                // finite D4
        a1hat(),                                   // affine A^1
        cycle_graph(3),                            // affine A^2
        cycle_graph(4),                            // affine A^3
        kronecker(3),                              // indefinite rank 2
        gcm({{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}}),// indefinite rank 3
        gcm({{2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -2}, {0, 0, -2, 2}}), // indefinite rank 4
        gcm({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}), // indefinite rank 4
        gcm({{2, -3, 0}, {-3, 2, -1}, {0, -1, 2}}),// indefinite rank 3, wilder
    };
}

/// Independent root oracle: orbit closure of the simple roots and of the
/// fundamental-set elements under the reflections, pruned at the height
/// bound. Any positive root of height <= h is reachable through positive
/// roots of smaller height (reverse a height descent), so the pruning loses
/// nothing. Purpose-built for tests; shares no code path with enumerate_roots.
struct OracleRoots {
    std::set<IntVec> real;
    std::set<IntVec> imaginary;
};

inline OracleRoots oracle_roots(const Gcm& a, long long h) {
    const int n = a.rank();
    auto in_k = [&](const IntVec& v) {
        bool nz = false;
        for (const auto& x : v) {
            if (x < 0) return false;
            if (x > 0) nz = true;
        }
        if (!nz) return false;
        for (int i = 0; i < n; ++i) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s += a(i, j) * v[j];
            if (s > 0) return false;
        }
        return support(a, v).connected;
    };

    OracleRoots out;
    std::vector<IntVec> queue;
    auto push = [&](const IntVec& v, bool real_family) {
        auto& fam = real_family ? out.real : out.imaginary;
        if (fam.insert(v).second) queue.push_back(v);
    };

    for (int i = 0; i < n; ++i) {
        IntVec e(n);
        e[i] = 1;
        push(e, true);
    }
    // all fundamental-set elements inside the height box
    IntVec v(n);
    auto scan = [&](auto&& self, int pos, long long left) -> void {
        if (pos == n) {
            if (in_k(v)) push(v, false);
            return;
        }
        for (long long c0 = 0; c0 <= left; ++c0) {
            v[pos] = c0;
            self(self, pos + 1, left - c0);
        }
    };
    scan(scan, 0, h);

    while (!queue.empty()) {
        IntVec u = std::move(queue.back());
        queue.pop_back();
        const bool real_family = out.real.count(u) > 0;
        for (int i = 0; i < n; ++i) {
            IntVec w = reflect(a, i, u);
            bool pos = true;
            Int ht = 0;
            for (const auto& x : w) {
                if (x < 0) pos = false;
                ht += x;
            }
            if (pos && ht <= h) push(w, real_family);
        }
    }
    return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination; test-only,
/// independent of the library's inertia path.
inline Int oracle_det(const Gcm& a, const std::vector<int>& rows) {
    const int m = int(rows.size());
    std::vector<std::vector<Int>> w(m, std::vector<Int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) w[i][j] = a(rows[i], rows[j]);
    Int prev = 1;
    int sign_flips = 0;
    for (int k = 0; k < m - 1; ++k) {
        if (w[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < m; ++i)
                if (w[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(w[k], w[p]);
            ++sign_flips;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j)
                w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
        prev = w[k][k];
    }
    Int det = m == 0 ? Int(1) : w[m - 1][m - 1];
    return sign_flips % 2 ? -det : det;
}

/// Cartan-type oracle from principal minors: positive definite iff all leading
/// principal minors are positive (Sylvester); positive semidefinite iff every
/// principal minor is nonnegative; affine needs corank one on top of that.
inline CartanTag oracle_cartan_tag(const Gcm& a) {
    const int n = a.rank();
    bool leading_positive = true;
    std::vector<int> lead;
    for (int k = 0; k < n; ++k) {
        lead.push_back(k);
        if (oracle_det(a, lead) <= 0) {
            leading_positive = false;
            break;
        }
    }
    if (leading_positive) return CartanTag::Finite;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> rows;
        for (int k = 0; k < n; ++k)
            if (mask & (1u << k)) rows.push_back(k);
        if (oracle_det(a, rows) < 0) return CartanTag::Indefinite;
    }
    // semidefinite; for an indecomposable GCM the kernel is one-dimensional
    return CartanTag::Affine;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(20270811u);
    return gen;
}

inline Word random_word(int rank, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(0, rank - 1);
    Word w(len(rng()));
    for (auto& l : w) l = gen(rng());
    return w;
}

inline IntVec random_vec(int rank, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntVec v(rank);
    for (auto& x : v) x = d(rng());
    return v;
}

/// random charge with all values strictly in the open upper half plane
inline Charge random_chamber_charge(int rank) {
    std::uniform_int_distribution<int> re(-6, 6), im(1, 6), den(1, 3);
    Charge z(rank);
    for (auto& v : z) v = {Rat(re(rng()), den(rng())), Rat(im(rng()), den(rng()))};
    return z;
}

} // namespace kmstab::testing
