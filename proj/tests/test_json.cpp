#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "kmstab/json_io.hpp"

using namespace kmstab;
using namespace kmstab::testing;
using io::Json;

TEST_CASE("quiver form") {
    auto a = io::parse_gcm_input(Json::parse(R"({"vertices":2,"arrows":[[1,2],[1,2]]})"));
    CHECK(a.matrix() == IntMat{{2, -2}, {-2, 2}});

    CHECK_THROWS_AS(io::parse_gcm_input(Json::parse(R"({"vertices":2})")), Error);
    CHECK_THROWS_AS(io::parse_gcm_input(
                        Json::parse(R"({"vertices":2,"arrows":[[1,2]],"gcm":[[2]]})")),
                    Error);
    CHECK_THROWS_AS(io::parse_gcm_input(Json::parse(R"({"vertices":2,"arrows":[[0,1]]})")),
                    Error); // 1-based on the wire
    CHECK_THROWS_AS(io::parse_gcm_input(Json::parse(R"({"vertices":2,"arrows":[[1,1]]})")),
                    Error); // loop
}

TEST_CASE("direct gcm form") {
    auto a = io::parse_gcm_input(Json::parse(R"({"gcm":[[2,-3],[-3,2]]})"));
    CHECK(a.matrix() == IntMat{{2, -3}, {-3, 2}});
    CHECK_THROWS_AS(io::parse_gcm_input(Json::parse(R"({"gcm":[[2,-1],[0,2]]})")), Error);
    CHECK_THROWS_AS(io::parse_gcm_input(Json::parse(R"({"gcm":[[2,1],[1,2]]})")), Error);
    CHECK_THROWS_AS(io::parse_gcm_input(Json::parse(R"({"gcm":[[3]]})")), Error);
}

TEST_CASE("charge parsing accepts rational strings and integer shorthand") {
    auto z = io::parse_charge(Json::parse(R"({"z":[["1/2","-3"],[4,"0/1"]]})"));
    REQUIRE(z.size() == 2);
    CHECK(z[0] == GaussRat{Rat(1, 2), Rat(-3)});
    CHECK(z[1] == GaussRat{Rat(4), Rat(0)});

    CHECK_THROWS_AS(io::parse_charge(Json::parse(R"({"z":[["1/0","0"]]})")), Error);
    CHECK_THROWS_AS(io::parse_charge(Json::parse(R"({"z":[["a","0"]]})")), Error);
    CHECK_THROWS_AS(io::parse_charge(Json::parse(R"({"z":[]})")), Error);
}

TEST_CASE("rational canonical form") {
    CHECK(format_rational(Rat(4, 6)) == "2/3");
    CHECK(format_rational(Rat(-4, 6)) == "-2/3");
    CHECK(format_rational(Rat(7, 1)) == "7");
    CHECK(format_rational(Rat(0)) == "0");
    CHECK(parse_rational("-10/4") == Rat(-5, 2));
}

TEST_CASE("path parsing accepts charge objects and bare arrays") {
    auto p = io::parse_path(
        Json::parse(R"({"waypoints":[{"z":[[0,1],[0,1]]},[[1,1],[2,"1/2"]]]})"));
    REQUIRE(p.waypoints.size() == 2);
    CHECK(p.waypoints[1][1] == GaussRat{Rat(2), Rat(1, 2)});
    CHECK_THROWS_AS(io::parse_path(Json::parse(R"({"waypoints":[{"z":[[0,1]]}]})")), Error);
}

TEST_CASE("braid shorthand and JSON form") {
    auto b = io::parse_braid_shorthand("1,-2,3", 3);
    REQUIRE(b.letters.size() == 3);
    CHECK(b.letters[1] == BraidLetter{1, -1});
    CHECK(b.shift == 0);
    CHECK_THROWS_AS(io::parse_braid_shorthand("1,0", 3), Error);
    CHECK_THROWS_AS(io::parse_braid_shorthand("4", 3), Error);
    CHECK_THROWS_AS(io::parse_braid_shorthand("1,,2", 3), Error);

    auto j = io::parse_braid_json(Json::parse(R"({"letters":[[2,-1]],"shift":4})"), 2);
    CHECK(j.letters[0] == BraidLetter{1, -1});
    CHECK(j.shift == 4);
    CHECK_THROWS_AS(io::parse_braid_json(Json::parse(R"({"letters":[],"shift":3})"), 2),
                    Error); // odd shift
    CHECK_THROWS_AS(io::parse_braid_json(Json::parse(R"({"letters":[[1,2]]})"), 2), Error);
}

TEST_CASE("serializers are 1-based and canonical") {
    CHECK(io::word_json({0, 2, 1}).dump() == "[1,3,2]");
    BraidWord b{{{1, -1}, {0, 1}}, 2};
    CHECK(io::braid_letters_json(b).dump() == "[[2,-1],[1,1]]");
    CHECK(io::gauss_json(GaussRat{Rat(1, 2), Rat(-3)}).dump() == R"(["1/2","-3"])");
    CHECK(io::intvec_json(vec({1, -2})).dump() == "[1,-2]");
    CHECK(io::matrix_json(IntMat{{1, 0}, {2, -1}}).dump() == "[[1,0],[2,-1]]");
}

TEST_CASE("charge round-trip through the wire format") {
    for (int trial = 0; trial < 30; ++trial) {
        Charge z = random_chamber_charge(3);
        Json j;
        j["z"] = io::charge_json(z);
        CHECK(io::parse_charge(j) == z);
    }
}
