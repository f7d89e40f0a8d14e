#include "kmstab/roots.hpp"

#include <algorithm>

namespace kmstab {

const char* tag_name(RootTag t) {
    switch (t) {
        case RootTag::RealPositive: return "RealPositive";
        case RootTag::RealNegative: return "RealNegative";
        case RootTag::ImaginaryPositive: return "ImaginaryPositive";
        case RootTag::ImaginaryNegative: return "ImaginaryNegative";
        case RootTag::NotARoot: return "NotARoot";
    }
    return "?";
}

namespace {

void check_dim(const Gcm& a, const IntVec& v) {
    if (int(v.size()) != a.rank()) fail(ErrorKind::DimensionMismatch, "vector length vs rank");
}

void check_index(const Gcm& a, int i) {
    if (i < 0 || i >= a.rank()) fail(ErrorKind::IndexOutOfRange, "generator index");
}

// (v, alpha_i) = row i of A times v
Int pair_with_simple(const Gcm& a, const IntVec& v, int i) {
    Int s = 0;
    for (int j = 0; j < a.rank(); ++j) s += a(i, j) * v[j];
    return s;
}

int simple_index(const IntVec& v) {
    int idx = -1;
    for (int i = 0; i < int(v.size()); ++i) {
        if (v[i] == 0) continue;
        if (idx >= 0 || v[i] != 1) return -1;
        idx = i;
    }
    return idx;
}

} // namespace

Int pair_form(const Gcm& a, const IntVec& v, const IntVec& w) {
    check_dim(a, v);
    check_dim(a, w);
    Int s = 0;
    for (int i = 0; i < a.rank(); ++i) {
        if (v[i] == 0) continue;
        s += v[i] * pair_with_simple(a, w, i);
    }
    return s;
}

IntVec reflect(const Gcm& a, int i, const IntVec& v) {
    check_index(a, i);
    check_dim(a, v);
    IntVec w = v;
    w[i] -= pair_with_simple(a, v, i);
    return w;
}

IntVec apply_word(const Gcm& a, const Word& w, const IntVec& v) {
    IntVec r = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = reflect(a, *it, r);
    return r;
}

bool in_fundamental_set(const Gcm& a, const IntVec& v) {
    check_dim(a, v);
    bool nonzero = false;
    for (const auto& c : v) {
        if (c < 0) return false;
        if (c > 0) nonzero = true;
    }
    if (!nonzero) return false;
    for (int i = 0; i < a.rank(); ++i)
        if (pair_with_simple(a, v, i) > 0) return false;
    return support(a, v).connected;
}

RootClass classify_root(const Gcm& a, const IntVec& v) {
    check_dim(a, v);
    bool has_pos = false, has_neg = false;
    for (const auto& c : v) {
        if (c > 0) has_pos = true;
        if (c < 0) has_neg = true;
    }
    if (has_pos == has_neg) return {RootTag::NotARoot, {}}; // zero or mixed signs

    const bool positive = has_pos;
    IntVec u = v;
    if (!positive)
        for (auto& c : u) c = -c;

    Word witness; // apply_word(witness, v) reaches the terminal vector
    for (;;) {
        if (simple_index(u) >= 0)
            return {positive ? RootTag::RealPositive : RootTag::RealNegative, witness};
        if (in_fundamental_set(a, u))
            return {positive ? RootTag::ImaginaryPositive : RootTag::ImaginaryNegative, witness};
        int step = -1;
        for (int i = 0; i < a.rank(); ++i)
            if (pair_with_simple(a, u, i) > 0) {
                step = i;
                break;
            }
        if (step < 0) return {RootTag::NotARoot, {}}; // positive, pairs <= 0, support disconnected
        u = reflect(a, step, u);
        for (const auto& c : u)
            if (c < 0) return {RootTag::NotARoot, {}}; // left the positive cone: not a root
        witness.insert(witness.begin(), step);
    }
}

namespace {

Int box_size(int n, long long h) {
    // number of nonzero lattice points with nonnegative coords and height <= h
    Int total = 1;
    for (int k = 1; k <= n; ++k) total = total * Int(h + k) / k; // C(h+n, n)
    return total - 1;
}

template <typename Fn>
void for_compositions(int n, long long h, IntVec& v, int pos, Fn&& fn) {
    if (pos == n - 1) {
        v[pos] = h;
        fn(v);
        return;
    }
    for (long long c = 0; c <= h; ++c) {
        v[pos] = c;
        for_compositions(n, h - c, v, pos + 1, fn);
    }
}

} // namespace

std::vector<RootEntry> enumerate_roots(const Gcm& a, long long h, long long box_budget) {
    if (h < 1) fail(ErrorKind::InvalidInput, "height bound must be >= 1");
    const int n = a.rank();
    if (box_size(n, h) > box_budget)
        fail(ErrorKind::BudgetExceeded, "candidate lattice box exceeds the budget");

    std::vector<RootEntry> out;
    IntVec v(n);
    for (long long ht = 1; ht <= h; ++ht) {
        for_compositions(n, ht, v, 0, [&](const IntVec& cand) {
            RootClass c = classify_root(a, cand);
            if (is_root(c)) out.push_back({cand, std::move(c)});
        });
    }
    // generation is already (height, lex) ascending
    return out;
}

IntMat weyl_matrix(const Gcm& a, const Word& w) {
    const int n = a.rank();
    IntMat m(n, n);
    IntVec e(n);
    for (int j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), Int(0));
        e[j] = 1;
        IntVec img = apply_word(a, w, e);
        for (int i = 0; i < n; ++i) m(i, j) = img[i];
    }
    return m;
}

} // namespace kmstab
