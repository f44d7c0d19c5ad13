#include "doctest.h"

#include "helpers.hpp"
#include "legaug/corpus.hpp"
#include "legaug/correspond.hpp"

using namespace legaug;

namespace {

Augmentation rational_aug(const CeDga& dga, std::vector<std::pair<std::string, Rational>> vals) {
    auto Q = FieldSpec::rationals();
    Augmentation a;
    a.field = Q;
    a.rho = 0;
    a.values.assign(dga.gens.size(), Value::zero(Q));
    for (auto& [n, r] : vals) a.values[dga.gen_index(n)] = Value::of_rational(Q, r);
    a.tvalues = {-Value::one(Q)};
    return a;
}

} // namespace

TEST_CASE("fully dipped corpus diagrams: d^2 = 0, gradings, lattice pairing") {
    for (auto name : {"right-trefoil", "unknot", "stab-unknot"}) {
        ResolvedDiagram D = build_dipped(resolve(corpus_front(name), BasePointMode::PerCusp));
        CeDga dga = dga_of_diagram(D, name);
        INFO(name);
        CHECK(!dga.d_squared_witness().has_value());
        CHECK_NOTHROW(dga.check_gradings());
        for (size_t g = 0; g < D.gens.size(); ++g) {
            if (D.gens[g].cls == GenClass::DipA) {
                std::string bname = "b" + D.gens[g].name.substr(1);
                CHECK(D.gens[D.find_gen(bname)].grading == D.gens[g].grading + 1);
            }
        }
    }
}

TEST_CASE("dipped trefoil structure") {
    ResolvedDiagram D = build_dipped(resolve(corpus_front("right-trefoil"), BasePointMode::PerCusp));
    int nb = 0, na = 0;
    for (auto& g : D.gens) {
        nb += g.cls == GenClass::DipB;
        na += g.cls == GenClass::DipA;
    }
    CHECK(nb == 4 * 6);
    CHECK(na == 4 * 6);
    CeDga dga = dga_of_diagram(D);
    for (auto qn : {"q1", "q2"}) {
        REQUIRE(dga.diff[dga.gen_index(qn)].terms().size() == 2);
    }
    CHECK(dga.element_str(dga.diff[dga.gen_index("q1")]) == "+1*t1^1*[] +1*[a3_4_3]");
    CHECK(dga.element_str(dga.diff[dga.gen_index("q2")]) == "+1*t2^-1*[] +1*[a3_2_1]");
    bool has_unit = false;
    for (auto& t : dga.diff[dga.gen_index("b0_4_3")].terms())
        if (t.word.empty() && t.mono.is_unit() && t.coeff == 1) has_unit = true;
    CHECK(has_unit);
}

TEST_CASE("dip lattice locality") {
    ResolvedDiagram D = build_dipped(resolve(corpus_front("right-trefoil"), BasePointMode::PerCusp));
    CeDga dga = dga_of_diagram(D);
    for (size_t g = 0; g < D.gens.size(); ++g) {
        std::string n = D.gens[g].name;
        if (D.gens[g].cls == GenClass::DipA) {
            int dip = n[1] - '0';
            for (auto& t : dga.diff[g].terms())
                for (GenId w : t.word) {
                    CHECK(D.gens[w].cls == GenClass::DipA);
                    CHECK(D.gens[w].name[1] - '0' == dip);
                }
        }
        if (D.gens[g].cls == GenClass::DipB) {
            int dip = n[1] - '0';
            for (auto& t : dga.diff[g].terms())
                for (GenId w : t.word) {
                    auto cls = D.gens[w].cls;
                    std::string wn = D.gens[w].name;
                    if (cls == GenClass::Crossing) CHECK(wn == "c" + std::to_string(dip));
                    if (cls == GenClass::DipB) CHECK(wn[1] - '0' == dip);
                    if (cls == GenClass::DipA) CHECK((wn[1] - '0' == dip || wn[1] - '0' == dip - 1));
                    CHECK(cls != GenClass::Cusp);
                }
        }
    }
}

TEST_CASE("random dipped plats keep d^2 = 0") {
    for (auto& fd : testing::random_fronts(6, 2, 5, 99)) {
        ResolvedDiagram D = build_dipped(resolve(fd, BasePointMode::PerCusp));
        CeDga dga = dga_of_diagram(D);
        INFO(fd.to_plat());
        CHECK(!dga.d_squared_witness().has_value());
        CHECK_NOTHROW(dga.check_gradings());
    }
}

TEST_CASE("figure 12: augmentation eps5 reproduces the dipped value list") {
    FrontDiagram front = corpus_front("right-trefoil");
    CeDga dga = dga_of_diagram(resolve(front, BasePointMode::SingleTop));
    Augmentation eps5 = rational_aug(dga, {{"c1", {1, 2}}, {"c3", {1, 2}}});
    REQUIRE(is_augmentation(dga, eps5));

    CorrespondResult res = augmentation_to_ruling(front, eps5);
    CHECK(res.ruling.switches == std::vector<int>{0, 1, 2});
    CHECK(property_r_holds(res));

    for (auto& t : res.dipped_aug.tvalues) CHECK(t == -Value::one(res.dipped_aug.field));
    CHECK(base_point_count(res) == 5);

    std::vector<std::string> expect = {"1",   "1",  "-1/2", "-2", "-1/2", "-1/2", "2",
                                       "1/2", "-1", "-1",   "-1", "-1",   "1",    "1"};
    std::vector<std::string> got;
    for (auto& c : res.dipped.cols) {
        if (c.kind != ColKind::Cross) continue;
        const Value& v = res.dipped_aug.values[c.gen];
        if (!v.is_zero()) got.push_back(v.str());
    }
    CHECK(got == expect);
}

TEST_CASE("augmentation_to_ruling lands in the enumerated ruling set") {
    for (auto name : {"right-trefoil", "unknot"}) {
        FrontDiagram front = corpus_front(name);
        CeDga dga = dga_of_diagram(resolve(front, BasePointMode::SingleTop));
        auto all = enumerate_rulings(front, 0);
        for (int64_t p : {2, 3, 5}) {
            for (auto& aug : enumerate_augmentations(dga, FieldSpec::prime(p), 0)) {
                CorrespondResult res = augmentation_to_ruling(front, aug);
                CHECK(property_r_holds(res));
                CHECK(base_point_count(res) % 2 == 1);
                CHECK(is_augmentation(res.dipped_dga, res.dipped_aug));
                bool member = false;
                for (auto& R : all)
                    if (R.switches == res.ruling.switches) member = true;
                CHECK(member);
            }
        }
    }
}

TEST_CASE("F3 augmentation with only c1 switches at c1") {
    // The type II corrections can make later crossings augmented mid-process
    // (that is how the published dipped augmentation reaches c2 = 2), so the
    // switch set may grow beyond the input support; c1 itself must switch and
    // the result must be one of the enumerated rulings.
    FrontDiagram front = corpus_front("right-trefoil");
    CeDga dga = dga_of_diagram(resolve(front, BasePointMode::SingleTop));
    auto F3 = FieldSpec::prime(3);
    Augmentation a;
    a.field = F3;
    a.rho = 0;
    a.values.assign(dga.gens.size(), Value::zero(F3));
    a.values[dga.gen_index("c1")] = Value::of_int(F3, 1);
    a.tvalues = {Value::of_int(F3, 2)};
    REQUIRE(is_augmentation(dga, a));
    CorrespondResult res = augmentation_to_ruling(front, a);
    CHECK(res.ruling.is_switch(0));
    bool member = false;
    for (auto& R : enumerate_rulings(front, 0))
        if (R.switches == res.ruling.switches) member = true;
    CHECK(member);
}

TEST_CASE("ruling_to_dipped_augmentation and undip on trefoil and unknot") {
    for (auto name : {"right-trefoil", "unknot"}) {
        FrontDiagram front = corpus_front(name);
        CeDga dga = dga_of_diagram(resolve(front, BasePointMode::SingleTop));
        for (auto& R : enumerate_rulings(front, 0)) {
            CorrespondResult res =
                ruling_to_dipped_augmentation(front, R, FieldSpec::rationals(), 0);
            CHECK(property_r_holds(res));
            CHECK(is_augmentation(res.dipped_dga, res.dipped_aug));
            CHECK(base_point_count(res) % 2 == 1);
            for (auto& t : res.dipped_aug.tvalues)
                CHECK(t == -Value::one(res.dipped_aug.field));
            Augmentation back = undip_augmentation(res);
            CHECK(is_augmentation(dga, back));
            CHECK(back.tvalues[0] == -Value::one(back.field));
        }
    }
}

TEST_CASE("round trip: aug -> ruling -> dipped -> undip stays an augmentation") {
    FrontDiagram front = corpus_front("right-trefoil");
    CeDga dga = dga_of_diagram(resolve(front, BasePointMode::SingleTop));
    for (auto& aug : enumerate_augmentations(dga, FieldSpec::prime(5), 0)) {
        CorrespondResult res = augmentation_to_ruling(front, aug);
        Augmentation back = undip_augmentation(res);
        CHECK(is_augmentation(dga, back));
        CHECK(back.t_product() == aug.t_product());
    }
}

TEST_CASE("section 3 on the left-trefoil plat exercises negative configurations") {
    FrontDiagram front = corpus_front("left-trefoil-plat");
    CeDga dga = dga_of_diagram(resolve(front, BasePointMode::SingleTop));
    auto all = enumerate_rulings(front, 1);
    REQUIRE(all.size() == 1);
    CHECK(!is_oriented(all[0]));
    for (int64_t p : {2, 3}) {
        for (auto& aug : enumerate_augmentations(dga, FieldSpec::prime(p), 1)) {
            CorrespondResult res = augmentation_to_ruling(front, aug);
            CHECK(property_r_holds(res));
            CHECK(is_augmentation(res.dipped_dga, res.dipped_aug));
            CHECK(res.ruling.switches == all[0].switches);
        }
    }
}

TEST_CASE("ruling -> augmentation on the left-trefoil plat") {
    FrontDiagram front = corpus_front("left-trefoil-plat");
    CeDga dga = dga_of_diagram(resolve(front, BasePointMode::SingleTop));
    auto R = enumerate_rulings(front, 1)[0];
    CorrespondResult res = ruling_to_dipped_augmentation(front, R, FieldSpec::prime(5), 1);
    CHECK(property_r_holds(res));
    CHECK(is_augmentation(res.dipped_dga, res.dipped_aug));
    Augmentation back = undip_augmentation(res);
    CHECK(is_augmentation(dga, back));
}

TEST_CASE("odd variety construction realizes -x^2 on the left trefoil") {
    FrontDiagram front = corpus_front("left-trefoil-plat");
    CeDga dga = dga_of_diagram(resolve(front, BasePointMode::SingleTop));
    auto R = enumerate_rulings(front, 1)[0];
    auto F5 = FieldSpec::prime(5);
    for (int64_t xv : {1, 2, 3, 4}) {
        Value x = Value::of_int(F5, xv);
        CorrespondResult res = construct_odd_variety_augmentation(front, R, x, 1);
        Augmentation back = undip_augmentation(res);
        CHECK(is_augmentation(dga, back));
        CHECK(back.tvalues[0] == -(x * x));
    }
    CorrespondResult res =
        construct_odd_variety_augmentation(front, R, Value::one(FieldSpec::rationals()), 1);
    Augmentation back = undip_augmentation(res);
    CHECK(back.tvalues[0] == -Value::one(FieldSpec::rationals()));
}

TEST_CASE("odd variety construction rejects oriented rulings") {
    FrontDiagram front = corpus_front("right-trefoil");
    for (auto& r : enumerate_rulings(front, 1))
        CHECK_THROWS_AS(
            construct_odd_variety_augmentation(front, r, Value::one(FieldSpec::prime(5)), 1),
            correspond_error);
}

TEST_CASE("even-rho product invariant on constructed dipped augmentations") {
    FrontDiagram front = corpus_front("right-trefoil");
    Orientation o = orient(front);
    CeDga dga = dga_of_diagram(resolve(front, BasePointMode::SingleTop));
    for (auto& aug : enumerate_augmentations(dga, FieldSpec::prime(5), 0)) {
        CorrespondResult res = augmentation_to_ruling(front, aug);
        for (int gap = 0; gap <= (int)front.word.size(); ++gap) {
            Value prod = Value::one(aug.field);
            for (auto& ev : res.log) {
                if (ev.kind != BuildEvent::Kind::Push || ev.gap != gap) continue;
                if (res.ruling.states[gap][ev.push.k - 1] != ev.push.l) continue;
                int sgn = o.at(gap, ev.push.k);
                prod = prod * res.dipped_aug.values[ev.push.a].pow(sgn);
            }
            CHECK(prod == Value::one(aug.field));
        }
    }
}
