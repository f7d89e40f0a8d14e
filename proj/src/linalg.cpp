#include "kmstab/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace kmstab::linalg {

Inertia symmetric_inertia(RatMat a) {
    const int n = a.rows();
    if (a.cols() != n) fail(ErrorKind::DimensionMismatch, "inertia of non-square matrix");
    Inertia in;
    std::vector<int> act(n);
    std::iota(act.begin(), act.end(), 0);

    while (!act.empty()) {
        int pivot = -1;
        for (int k : act)
            if (a(k, k) != 0) {
                pivot = k;
                break;
            }
        if (pivot >= 0) {
            const Rat p = a(pivot, pivot);
            if (p > 0)
                ++in.positive;
            else
                ++in.negative;
            for (int i : act) {
                if (i == pivot) continue;
                const Rat f = a(i, pivot) / p;
                if (f == 0) continue;
                for (int j : act) {
                    if (j == pivot) continue;
                    a(i, j) -= f * a(pivot, j);
                }
            }
            act.erase(std::find(act.begin(), act.end(), pivot));
            continue;
        }
        // zero diagonal everywhere; look for a hyperbolic pair
        int pi = -1, pj = -1;
        for (size_t x = 0; x < act.size() && pi < 0; ++x)
            for (size_t y = x + 1; y < act.size(); ++y)
                if (a(act[x], act[y]) != 0) {
                    pi = act[x];
                    pj = act[y];
                    break;
                }
        if (pi < 0) {
            in.zero += int(act.size());
            break;
        }
        const Rat b = a(pi, pj);
        ++in.positive;
        ++in.negative;
        // Schur complement with respect to the 2x2 block [[0,b],[b,0]]
        for (int r : act) {
            if (r == pi || r == pj) continue;
            const Rat ri = a(r, pi), rj = a(r, pj);
            if (ri == 0 && rj == 0) continue;
            for (int s : act) {
                if (s == pi || s == pj) continue;
                a(r, s) -= (ri * a(pj, s) + rj * a(pi, s)) / b;
            }
        }
        act.erase(std::find(act.begin(), act.end(), pi));
        act.erase(std::find(act.begin(), act.end(), pj));
    }
    return in;
}

namespace {

// Row echelon with column tracking; returns pivot column per row.
std::vector<int> echelon(RatMat& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const Rat inv = m(r, c);
        for (int j = c; j < cols; ++j) m(r, j) /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rat f = m(i, c);
            for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    return pivot_col;
}

} // namespace

std::optional<RatVec> solve(RatMat a, RatVec b) {
    const int n = a.rows();
    if (a.cols() != n || int(b.size()) != n)
        fail(ErrorKind::DimensionMismatch, "solve shape");
    RatMat aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto piv = echelon(aug);
    if (int(piv.size()) != n || (n > 0 && piv.back() == n)) return std::nullopt;
    RatVec x(n);
    for (int r = 0; r < n; ++r) x[piv[r]] = aug(r, n);
    return x;
}

std::vector<RatVec> kernel_basis(RatMat a) {
    const int cols = a.cols();
    auto piv = echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols);
        v[free] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(int(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> feasible_point(const RatMat& c, const RatVec& d) {
    const int m = c.rows();
    const int n = c.cols();
    if (int(d.size()) != m) fail(ErrorKind::DimensionMismatch, "feasible_point shape");

    // Rows: C x + s = d, with rows flipped so the right side is nonnegative;
    // flipped rows get an artificial variable. Phase-1 minimizes their sum.
    int n_art = 0;
    for (int i = 0; i < m; ++i)
        if (d[i] < 0) ++n_art;
    const int nv = n + m + n_art;

    RatMat t(m, nv);
    RatVec rhs(m);
    std::vector<int> basis(m);
    std::vector<bool> artificial(nv, false);
    int art = 0;
    for (int i = 0; i < m; ++i) {
        const bool flip = d[i] < 0;
        for (int j = 0; j < n; ++j) t(i, j) = flip ? -c(i, j) : c(i, j);
        t(i, n + i) = flip ? Rat(-1) : Rat(1);
        rhs[i] = flip ? -d[i] : d[i];
        if (flip) {
            const int a_col = n + m + art++;
            t(i, a_col) = 1;
            artificial[a_col] = true;
            basis[i] = a_col;
        } else {
            basis[i] = n + i;
        }
    }

    for (;;) {
        // reduced costs for the phase-1 objective (sum of artificials)
        int enter = -1;
        for (int j = 0; j < nv && enter < 0; ++j) {
            Rat red = artificial[j] ? Rat(1) : Rat(0);
            for (int i = 0; i < m; ++i)
                if (artificial[basis[i]]) red -= t(i, j);
            if (red < 0) enter = j; // Bland: smallest index
        }
        if (enter < 0) break;

        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t(i, enter) <= 0) continue;
            const Rat ratio = rhs[i] / t(i, enter);
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) fail(ErrorKind::Internal, "phase-1 simplex unbounded");

        const Rat pv = t(leave, enter);
        for (int j = 0; j < nv; ++j) t(leave, j) /= pv;
        rhs[leave] /= pv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t(i, enter) == 0) continue;
            const Rat f = t(i, enter);
            for (int j = 0; j < nv; ++j) t(i, j) -= f * t(leave, j);
            rhs[i] -= f * rhs[leave];
        }
        basis[leave] = enter;
    }

    Rat obj = 0;
    for (int i = 0; i < m; ++i)
        if (artificial[basis[i]]) obj += rhs[i];
    if (obj != 0) return std::nullopt;

    RatVec x(n);
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = rhs[i];
    return x;
}

} // namespace kmstab::linalg
