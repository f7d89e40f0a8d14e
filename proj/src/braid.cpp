#include "kmstab/braid.hpp"

#include <algorithm>

#include "kmstab/roots.hpp"

namespace kmstab {

Int euler_form(const Gcm& a, const IntVec& v, const IntVec& w) {
    return pair_form(a, v, w); // chi(S_i, S_j) = a_ij makes the forms identical
}

IntMat twist_matrix(const Gcm& a, int i) {
    if (i < 0 || i >= a.rank()) fail(ErrorKind::IndexOutOfRange, "twist generator");
    IntMat m = IntMat::identity(a.rank());
    for (int j = 0; j < a.rank(); ++j) m(i, j) -= a(i, j);
    return m;
}

std::pair<IntMat, long long> braid_to_kmatrix(const Gcm& a, const BraidWord& b) {
    IntMat m = IntMat::identity(a.rank());
    for (const auto& l : b.letters) m = m * twist_matrix(a, l.gen);
    return {m, b.shift};
}

std::vector<RelationCheck> check_braid_relations(const Gcm& a, int power_bound) {
    std::vector<RelationCheck> out;
    for (int i = 0; i < a.rank(); ++i) {
        for (int j = i + 1; j < a.rank(); ++j) {
            IntMat ti = twist_matrix(a, i), tj = twist_matrix(a, j);
            RelationCheck c{i, j, a(i, j), "", false};
            if (a(i, j) == 0) {
                c.kind = "commute";
                c.pass = ti * tj == tj * ti;
            } else if (a(i, j) == -1) {
                c.kind = "braid";
                c.pass = ti * tj * ti == tj * ti * tj;
            } else {
                c.kind = "infinite-order";
                c.pass = true;
                IntMat p = ti * tj;
                IntMat q = p;
                for (int k = 1; k <= power_bound; ++k) {
                    if (q.is_identity()) {
                        c.pass = false;
                        break;
                    }
                    q = q * p;
                }
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

namespace {

std::vector<BraidLetter> free_reduce(std::vector<BraidLetter> w) {
    std::vector<BraidLetter> out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

} // namespace

BraidWord simplify(const Gcm& a, const BraidWord& b) {
    for (const auto& l : b.letters)
        if (l.gen < 0 || l.gen >= a.rank()) fail(ErrorKind::IndexOutOfRange, "braid letter");

    std::vector<BraidLetter> w = free_reduce(b.letters);

    // hill-climb: accept a braid/commutation rewrite only if the cascaded free
    // reduction shortens the word
    bool improved = true;
    while (improved) {
        improved = false;
        for (size_t p = 0; p + 1 < w.size() && !improved; ++p) {
            // commutation swap
            if (a(w[p].gen, w[p + 1].gen) == 0 && w[p].gen != w[p + 1].gen) {
                auto cand = w;
                std::swap(cand[p], cand[p + 1]);
                cand = free_reduce(cand);
                if (cand.size() < w.size()) {
                    w = std::move(cand);
                    improved = true;
                    continue;
                }
            }
            // braid move on a same-exponent triple
            if (p + 2 < w.size() && a(w[p].gen, w[p + 1].gen) == -1 &&
                w[p].gen == w[p + 2].gen && w[p].gen != w[p + 1].gen &&
                w[p].exp == w[p + 1].exp && w[p].exp == w[p + 2].exp) {
                auto cand = w;
                std::swap(cand[p].gen, cand[p + 1].gen);
                cand[p + 2].gen = cand[p].gen;
                cand = free_reduce(cand);
                if (cand.size() < w.size()) {
                    w = std::move(cand);
                    improved = true;
                }
            }
        }
    }

    BraidWord result{std::move(w), b.shift};
    if (braid_to_kmatrix(a, result).first != braid_to_kmatrix(a, b).first)
        fail(ErrorKind::Internal, "simplify changed the K-matrix");
    return result;
}

} // namespace kmstab
