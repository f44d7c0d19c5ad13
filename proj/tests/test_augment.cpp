#include "doctest.h"

#include "helpers.hpp"
#include "legaug/augment.hpp"
#include "legaug/corpus.hpp"
#include "legaug/rulings.hpp"

using namespace legaug;

namespace {

CeDga corpus_dga(const std::string& name) {
    return dga_of_diagram(resolve(corpus_front(name), BasePointMode::SingleTop), name);
}

} // namespace

TEST_CASE("trefoil augmentation counts over small prime fields") {
    CeDga dga = corpus_dga("right-trefoil");
    // classification F + F + (F*)^2 gives p + p + (p-1)^2
    for (int64_t p : {2, 3, 5}) {
        auto augs = enumerate_augmentations(dga, FieldSpec::prime(p), 0);
        CHECK((int64_t)augs.size() == p + p + (p - 1) * (p - 1));
        for (auto& a : augs) {
            CHECK(a.t_product().residue() == p - 1); // eps(t) = -1
            CHECK(a.values[dga.gen_index("q1")].is_zero());
            CHECK(a.values[dga.gen_index("q2")].is_zero());
            CHECK(is_augmentation(dga, a));
        }
    }
}

TEST_CASE("unknot has one augmentation with eps(t) = -1") {
    CeDga dga = corpus_dga("unknot");
    auto augs = enumerate_augmentations(dga, FieldSpec::prime(5), 0);
    REQUIRE(augs.size() == 1);
    CHECK(augs[0].t_product().residue() == 4);
}

TEST_CASE("stabilized unknot has no augmentations") {
    CeDga dga = corpus_dga("stab-unknot");
    CHECK(enumerate_augmentations(dga, FieldSpec::prime(3), 1).empty());
    CHECK(augmentation_variety(dga, FieldSpec::prime(3), 1).empty());
}

TEST_CASE("is_augmentation checks the published rational augmentations") {
    CeDga dga = corpus_dga("right-trefoil");
    auto Q = FieldSpec::rationals();
    auto make = [&](Rational c1, Rational c2, Rational c3) {
        Augmentation a;
        a.field = Q;
        a.rho = 0;
        a.values.assign(dga.gens.size(), Value::zero(Q));
        a.values[dga.gen_index("c1")] = Value::of_rational(Q, c1);
        a.values[dga.gen_index("c2")] = Value::of_rational(Q, c2);
        a.values[dga.gen_index("c3")] = Value::of_rational(Q, c3);
        a.tvalues = {-Value::one(Q)};
        return a;
    };
    CHECK(is_augmentation(dga, make({1, 2}, {0}, {1, 2})));             // eps_5
    CHECK(is_augmentation(dga, make({2}, {3, 4}, {-2, 5})));            // eps_3
    CHECK_FALSE(is_augmentation(dga, make({0}, {0}, {0})));             // eps(dq2) = 1
}

TEST_CASE("odd-rho varieties") {
    CeDga rt = corpus_dga("right-trefoil");
    for (int64_t p : {3, 5, 7})
        CHECK(augmentation_variety(rt, FieldSpec::prime(p), 1) == std::vector<int64_t>{p - 1});

    CeDga lt = left_trefoil_dga();
    CHECK(augmentation_variety(lt, FieldSpec::prime(3), 1) == std::vector<int64_t>{2});
    CHECK(augmentation_variety(lt, FieldSpec::prime(5), 1) == std::vector<int64_t>{1, 4});
    CHECK(augmentation_variety(lt, FieldSpec::prime(7), 1) == std::vector<int64_t>{3, 5, 6});
}

TEST_CASE("left-trefoil plat front matches the explicit DGA's variety") {
    CeDga dga = corpus_dga("left-trefoil-plat");
    CHECK(augmentation_variety(dga, FieldSpec::prime(3), 1) == std::vector<int64_t>{2});
    CHECK(augmentation_variety(dga, FieldSpec::prime(5), 1) == std::vector<int64_t>{1, 4});
}

TEST_CASE("even-rho law: every even-graded augmentation sends t to -1") {
    std::vector<CeDga> dgas;
    for (auto& f : corpus_fronts()) dgas.push_back(corpus_dga(f.name));
    dgas.push_back(left_trefoil_dga());
    for (auto& dga : dgas) {
        for (int64_t p : {2, 3, 5}) {
            for (int rho : {0, 2}) {
                if (rho == 0 && dga.modulus != 0) continue;
                if (rho != 0 && dga.modulus != 0 && dga.modulus % rho != 0) continue;
                std::vector<Augmentation> augs;
                try {
                    augs = enumerate_augmentations(dga, FieldSpec::prime(p), rho);
                } catch (const augment_error&) {
                    continue;
                }
                for (auto& a : augs) CHECK(a.t_product().residue() == p - 1);
            }
        }
    }
}

TEST_CASE("odd-rho law: eps(t) is always -x^2") {
    for (auto& f : corpus_fronts()) {
        CeDga dga = corpus_dga(f.name);
        for (int64_t p : {3, 5}) {
            auto f5 = FieldSpec::prime(p);
            std::vector<bool> squares(p, false);
            for (int64_t x = 1; x < p; ++x) squares[(p - x * x % p) % p] = true;
            for (auto& a : enumerate_augmentations(dga, f5, 1))
                CHECK(squares[a.t_product().residue()]);
        }
    }
}

TEST_CASE("existence equivalence with rulings on random fronts") {
    for (auto& d : testing::random_fronts(25, 3, 6, 77)) {
        Orientation o = orient(d);
        int rho = o.r == 0 ? 0 : 1;
        CeDga dga = dga_of_diagram(resolve(d, BasePointMode::SingleTop));
        bool has_ruling = !enumerate_rulings(d, rho).empty();
        INFO(d.to_plat());
        for (int64_t p : {2, 3}) {
            bool has_aug = !enumerate_augmentations(dga, FieldSpec::prime(p), rho).empty();
            CHECK(has_aug == has_ruling);
        }
    }
}

TEST_CASE("stabilization multiplies the count by |F| when rho divides i") {
    CeDga dga = corpus_dga("right-trefoil");
    size_t base = enumerate_augmentations(dga, FieldSpec::prime(3), 0).size();

    auto stabilize = [&](int deg) {
        CeDga s = dga;
        s.gens.push_back({"e1", deg - 1});
        s.gens.push_back({"e2", deg});
        s.diff.push_back(AlgebraElement::zero());
        s.diff.push_back(AlgebraElement::generator((GenId)(s.gens.size() - 2)));
        return s;
    };
    CHECK(enumerate_augmentations(stabilize(0), FieldSpec::prime(3), 0).size() == base * 3);
    CHECK(enumerate_augmentations(stabilize(1), FieldSpec::prime(3), 0).size() == base);
}

TEST_CASE("budget guard and infinite field rejection") {
    CeDga dga = corpus_dga("right-trefoil");
    CHECK_THROWS_AS(enumerate_augmentations(dga, FieldSpec::prime(5), 0, 10), augment_error);
    CHECK_THROWS_AS(enumerate_augmentations(dga, FieldSpec::rationals(), 0), augment_error);
}

TEST_CASE("parallel search returns the same list") {
    CeDga dga = corpus_dga("right-trefoil");
    auto seq = enumerate_augmentations(dga, FieldSpec::prime(5), 0);
    auto par = enumerate_augmentations(dga, FieldSpec::prime(5), 0, default_budget(), 4);
    REQUIRE(seq.size() == par.size());
    for (size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].values == par[i].values);
        CHECK(seq[i].tvalues == par[i].tvalues);
    }
}
