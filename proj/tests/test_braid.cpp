#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "kmstab/braid.hpp"
#include "kmstab/roots.hpp"

using namespace kmstab;
using namespace kmstab::testing;

namespace {

BraidWord bw(std::initializer_list<int> signed_letters, long long shift = 0) {
    BraidWord b;
    b.shift = shift;
    for (int s : signed_letters) b.letters.push_back({std::abs(s) - 1, s > 0 ? 1 : -1});
    return b;
}

BraidWord random_braid(int rank, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), gen(0, rank - 1), e(0, 1);
    BraidWord b;
    int l = len(rng());
    for (int k = 0; k < l; ++k) b.letters.push_back({gen(rng()), e(rng()) ? 1 : -1});
    return b;
}

} // namespace

TEST_CASE("euler form equals the bilinear form") {
    for (const auto& a : corpus()) {
        for (int i = 0; i < a.rank(); ++i)
            for (int j = 0; j < a.rank(); ++j) {
                IntVec ei(a.rank()), ej(a.rank());
                ei[i] = 1;
                ej[j] = 1;
                CHECK(euler_form(a, ei, ej) == a(i, j));
            }
    }
    CHECK(euler_form(a1hat(), vec({1, 1}), vec({1, 1})) == 0);
}

TEST_CASE("twist matrices") {
    CHECK(twist_matrix(a1hat(), 0) == IntMat{{-1, 2}, {0, 1}});
    CHECK(twist_matrix(a2(), 1) == IntMat{{1, 0}, {1, -1}});
    for (const auto& a : corpus())
        for (int i = 0; i < a.rank(); ++i) {
            CHECK(twist_matrix(a, i) * twist_matrix(a, i) == IntMat::identity(a.rank()));
            CHECK(twist_matrix(a, i) == weyl_matrix(a, {i}));
        }
    CHECK_THROWS_AS(twist_matrix(a2(), 7), Error);
}

TEST_CASE("braid word to K-matrix") {
    auto [id, s0] = braid_to_kmatrix(a1hat(), bw({}));
    CHECK(id == IntMat::identity(2));
    CHECK(s0 == 0);

    auto [r2, s1] = braid_to_kmatrix(a1hat(), bw({-2}, 4));
    CHECK(r2 == IntMat{{1, 0}, {2, -1}});
    CHECK(s1 == 4);

    CHECK(braid_to_kmatrix(a2(), bw({1, 2, 1})).first ==
          braid_to_kmatrix(a2(), bw({2, 1, 2})).first);
}

TEST_CASE("homomorphism: concatenation multiplies matrices and adds shifts") {
    for (const auto& a : corpus()) {
        for (int trial = 0; trial < 30; ++trial) {
            BraidWord x = random_braid(a.rank(), 12);
            BraidWord y = random_braid(a.rank(), 12);
            x.shift = 2 * (trial - 5);
            y.shift = 4;
            BraidWord xy{x.letters, x.shift + y.shift};
            xy.letters.insert(xy.letters.end(), y.letters.begin(), y.letters.end());
            auto [mx, sx] = braid_to_kmatrix(a, x);
            auto [my, sy] = braid_to_kmatrix(a, y);
            auto [mxy, sxy] = braid_to_kmatrix(a, xy);
            CHECK(mxy == mx * my);
            CHECK(sxy == sx + sy);
        }
    }
}

TEST_CASE("every K-matrix preserves the form") {
    for (const auto& a : corpus()) {
        for (int trial = 0; trial < 50; ++trial) {
            auto [m, s] = braid_to_kmatrix(a, random_braid(a.rank(), 20));
            CHECK(m.transposed() * a.matrix() * m == a.matrix());
        }
    }
}

TEST_CASE("relation report") {
    for (const auto& c : check_braid_relations(a2())) {
        CHECK(c.kind == "braid");
        CHECK(c.pass);
    }
    for (const auto& c : check_braid_relations(a1hat())) {
        CHECK(c.kind == "infinite-order");
        CHECK(c.pass);
    }
    // commuting pair inside a rank-3 diagram
    auto checks = check_braid_relations(path_graph(3));
    REQUIRE(checks.size() == 3);
    CHECK(checks[0].kind == "braid");     // (1,2)
    CHECK(checks[1].kind == "commute");   // (1,3)
    CHECK(checks[2].kind == "braid");     // (2,3)
    for (const auto& c : checks) CHECK(c.pass);
}

TEST_CASE("simplify") {
    CHECK(simplify(a1hat(), bw({-2, 2})).letters.empty());
    CHECK(simplify(a1hat(), bw({1, 1})).letters.size() == 2); // no applicable relation

    auto s = simplify(a2(), bw({1, 2, 1, -2, -1}));
    CHECK(s.letters.size() <= 3);
    CHECK(braid_to_kmatrix(a2(), s).first == braid_to_kmatrix(a2(), bw({1, 2, 1, -2, -1})).first);

    // shift passes through untouched
    CHECK(simplify(a1hat(), bw({2, -2}, 6)).shift == 6);
}

TEST_CASE("property: simplify preserves the K-matrix and kills inverse pairs") {
    for (const auto& a : corpus()) {
        for (int trial = 0; trial < 40; ++trial) {
            BraidWord b = random_braid(a.rank(), 40);
            BraidWord s = simplify(a, b);
            CHECK(braid_to_kmatrix(a, s).first == braid_to_kmatrix(a, b).first);
            CHECK(s.letters.size() <= b.letters.size());
            for (size_t k = 0; k + 1 < s.letters.size(); ++k)
                CHECK_FALSE((s.letters[k].gen == s.letters[k + 1].gen &&
                             s.letters[k].exp == -s.letters[k + 1].exp));
        }
    }
}
