#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "legaug/rulings.hpp"

using namespace legaug;

namespace {

// Independent oracle: try all 2^n switch subsets and validate each directly.
std::set<std::vector<int>> brute_force_switch_sets(const FrontDiagram& d, int rho) {
    Orientation o = orient(d);
    MaslovPotential mp = maslov_potential(d, o);
    std::vector<int> grading = front_crossing_gradings(d, o, mp);
    int n = (int)d.word.size();
    std::set<std::vector<int>> found;
    for (int mask = 0; mask < (1 << n); ++mask) {
        RulingState st = initial_ruling_state(d.m);
        bool ok = true;
        std::vector<int> sw;
        for (int j = 0; j < n && ok; ++j) {
            int p = d.word[j];
            if (st[p - 1] == p + 1) {
                ok = false;
                break;
            }
            if (mask & (1 << j)) {
                bool g = rho == 0 ? grading[j] == 0 : ((grading[j] % rho) + rho) % rho == 0;
                if (!g || !switch_is_normal(st, p)) {
                    ok = false;
                    break;
                }
                sw.push_back(j);
            } else {
                RulingState next = st;
                std::swap(next[p - 1], next[p]);
                for (auto& v : next)
                    if (v == p)
                        v = p + 1;
                    else if (v == p + 1)
                        v = p;
                st = next;
            }
        }
        if (ok && st == initial_ruling_state(d.m)) found.insert(sw);
    }
    return found;
}

std::set<std::vector<int>> switch_sets(const std::vector<NormalRuling>& rs) {
    std::set<std::vector<int>> out;
    for (auto& r : rs) out.insert(r.switches);
    return out;
}

} // namespace

TEST_CASE("right trefoil has exactly the three graded normal rulings") {
    FrontDiagram d = parse_front("plat 2: 2 2 2");
    auto rulings = enumerate_rulings(d, 0);
    REQUIRE(rulings.size() == 3);
    auto sets = switch_sets(rulings);
    CHECK(sets.count({0}) == 1);
    CHECK(sets.count({2}) == 1);
    CHECK(sets.count({0, 1, 2}) == 1);
    CHECK(sets == brute_force_switch_sets(d, 0));
}

TEST_CASE("unknot has one ruling, stabilized unknot none") {
    FrontDiagram unk = parse_front("plat 1:");
    auto rs = enumerate_rulings(unk, 0);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].switches.empty());

    FrontDiagram stab = parse_front("plat 1: 1");
    CHECK(enumerate_rulings(stab, 1).empty());
    CHECK(enumerate_rulings(stab, 2).empty());
    CHECK_THROWS_AS(enumerate_rulings(stab, 0), diagram_error); // rho = 0 needs r = 0
}

TEST_CASE("configuration classification on the trefoil") {
    FrontDiagram d = parse_front("plat 2: 2 2 2");
    auto rulings = enumerate_rulings(d, 0);
    for (auto& R : rulings) {
        if (R.switches == std::vector<int>{0, 1, 2}) {
            CHECK(R.configs[0] == "+(a)");
            CHECK(R.configs[1] == "+(a)"); // pairing (12)(34), companions 1 below, 4 above
            CHECK(R.configs[2] == "+(a)");
        }
        if (R.switches == std::vector<int>{2}) {
            CHECK(R.configs[1] == "(d)"); // interlaced after the pass at c1
        }
        if (R.switches == std::vector<int>{0}) {
            CHECK(R.configs[1] == "pass"); // companions on both sides, passed
        }
    }
}

TEST_CASE("every trefoil ruling is oriented and passes the parity law") {
    FrontDiagram d = parse_front("plat 2: 2 2 2");
    for (auto& R : enumerate_rulings(d, 0)) {
        CHECK(is_oriented(R));
        CHECK(parity_check(d, R));
    }
    FrontDiagram unk = parse_front("plat 1:");
    for (auto& R : enumerate_rulings(unk, 0)) {
        CHECK(is_oriented(R));
        CHECK(parity_check(unk, R));
    }
}

TEST_CASE("ruling count polynomials") {
    FrontDiagram d = parse_front("plat 2: 2 2 2");
    auto poly = ruling_count_polynomial(d, 0);
    CHECK(poly == std::map<int, int>{{-1, 2}, {1, 1}});
    FrontDiagram unk = parse_front("plat 1:");
    CHECK(ruling_count_polynomial(unk, 0) == std::map<int, int>{{-1, 1}});
    FrontDiagram stab = parse_front("plat 1: 1");
    CHECK(ruling_count_polynomial(stab, 1).empty());
}

TEST_CASE("rulings on random fronts: oracle agreement, parity, interlacing") {
    for (auto& d : testing::random_fronts(30, 3, 7, 41)) {
        Orientation o = orient(d);
        int rho = o.r == 0 ? 0 : 1;
        auto rulings = enumerate_rulings(d, rho);
        INFO(d.to_plat());
        CHECK(switch_sets(rulings) == brute_force_switch_sets(d, rho));
        for (auto& R : rulings) {
            CHECK(parity_check(d, R));
            CHECK(interlaced_pairs(R.states.front()) == 0);
            CHECK(interlaced_pairs(R.states.back()) == 0);
            int passes = 0;
            for (int j = 0; j < (int)d.word.size(); ++j) {
                int delta = interlaced_pairs(R.states[j + 1]) - interlaced_pairs(R.states[j]);
                if (R.is_switch(j)) {
                    CHECK(delta == 0);
                } else {
                    CHECK((delta == 1 || delta == -1));
                    ++passes;
                }
            }
            CHECK(passes % 2 == 0); // cr == s mod 2
        }
    }
}

TEST_CASE("even-rho rulings never switch at negative crossings") {
    for (auto& d : testing::random_fronts(30, 3, 7, 43)) {
        Orientation o = orient(d);
        if (o.r != 0) continue;
        for (auto& R : enumerate_rulings(d, 0)) CHECK(is_oriented(R));
        for (auto& R : enumerate_rulings(d, 2)) CHECK(is_oriented(R));
    }
}

TEST_CASE("ruling render and json") {
    FrontDiagram d = parse_front("plat 1:");
    auto rs = enumerate_rulings(d, 0);
    CHECK(render_ruling(d, rs[0]).find("(1,2)") != std::string::npos);
    CHECK(rs[0].to_json(d) == R"({"configurations":[],"switches":[]})");
}
