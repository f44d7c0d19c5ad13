#include "doctest.h"

#include "helpers.hpp"
#include "legaug/diagram.hpp"

using namespace legaug;

TEST_CASE("parse_front accepts the corpus encodings") {
    FrontDiagram tre = parse_front("plat 2: 2 2 2");
    CHECK(tre.m == 2);
    CHECK(tre.word == std::vector<int>{2, 2, 2});

    FrontDiagram unk = parse_front("plat 1:");
    CHECK(unk.m == 1);
    CHECK(unk.word.empty());

    CHECK_THROWS_AS(parse_front("plat 2: 1"), diagram_error);   // two components
    CHECK_THROWS_AS(parse_front("plat 2: 4"), diagram_error);   // out of range
    CHECK_THROWS_AS(parse_front("plop 2: 1"), diagram_error);   // syntax
    CHECK_THROWS_AS(parse_front("plat 2: 2 2 2 2"), diagram_error);
}

TEST_CASE("json form round trips byte-stably") {
    FrontDiagram tre = parse_front("plat 2: 2 2 2");
    tre.name = "rt";
    std::string j = tre.to_json();
    FrontDiagram back = front_from_json(j);
    CHECK(back.to_json() == j);
    CHECK(back.m == 2);
    CHECK(back.word == tre.word);
}

TEST_CASE("orientation convention and cusp reversal") {
    FrontDiagram unk = parse_front("plat 1:");
    Orientation o = orient(unk);
    CHECK(o.at(0, 1) == 1);  // bottom strand rightward
    CHECK(o.at(0, 2) == -1); // top strand returns leftward
    FrontDiagram tre = parse_front("plat 2: 2 2 2");
    Orientation ot = orient(tre);
    CHECK(ot.at(0, 1) == 1);
}

TEST_CASE("classical invariants of the corpus") {
    {
        FrontDiagram d = parse_front("plat 2: 2 2 2");
        auto ci = classical_invariants(d, orient(d));
        CHECK(ci.tb == 1); // right trefoil
        CHECK(ci.r == 0);
    }
    {
        FrontDiagram d = parse_front("plat 1:");
        auto ci = classical_invariants(d, orient(d));
        CHECK(ci.tb == -1);
        CHECK(ci.r == 0);
    }
    {
        FrontDiagram d = parse_front("plat 1: 1"); // stabilized unknot
        auto ci = classical_invariants(d, orient(d));
        CHECK(ci.tb == -2);
        CHECK((ci.r == 1 || ci.r == -1));
    }
}

TEST_CASE("tb + r is odd on random fronts") {
    for (auto& d : testing::random_fronts(60, 3, 8, 11)) {
        auto ci = classical_invariants(d, orient(d));
        CHECK(((ci.tb + ci.r) % 2 + 2) % 2 == 1);
    }
}

TEST_CASE("maslov potential satisfies the cusp rule") {
    FrontDiagram tre = parse_front("plat 2: 2 2 2");
    Orientation o = orient(tre);
    MaslovPotential mp = maslov_potential(tre, o);
    // crossing strands at every c_i have equal potential (|c_i| = 0)
    for (int slice = 0; slice < 3; ++slice) CHECK(mp.at(slice, 2) == mp.at(slice, 3));
    // left cusps: upper strand one higher
    CHECK(mp.at(0, 2) == mp.at(0, 1) + 1);
    CHECK(mp.at(0, 4) == mp.at(0, 3) + 1);

    FrontDiagram unk = parse_front("plat 1:");
    MaslovPotential mu = maslov_potential(unk, orient(unk));
    CHECK(mu.at(0, 2) == mu.at(0, 1) + 1);
}
