#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "legaug/field.hpp"

using namespace legaug;

TEST_CASE("rational arithmetic is exact and reduced") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a - a).is_zero());
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(a.inverse() == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), arithmetic_error);
    CHECK(Rational::parse("-2/5") == Rational(-2, 5));
    CHECK(Rational(-2, 5).str() == "-2/5");
}

TEST_CASE("prime fields") {
    CHECK_THROWS_AS(FieldSpec::prime(4), arithmetic_error);
    auto f5 = FieldSpec::prime(5);
    Value x = Value::of_int(f5, 7);
    CHECK(x.residue() == 2);
    CHECK((x * x.inverse()) == Value::one(f5));
    CHECK((-Value::one(f5)).residue() == 4);
    CHECK(Value::of_rational(f5, Rational(1, 2)).residue() == 3);
    CHECK(Value::of_int(f5, 2).pow(-1).residue() == 3);
}

TEST_CASE("field spec parsing") {
    CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("Fp:7") == FieldSpec::prime(7));
    CHECK(FieldSpec::parse("F3") == FieldSpec::prime(3));
    CHECK_THROWS(FieldSpec::parse("R"));
}

TEST_CASE("mixed-field arithmetic rejected") {
    Value a = Value::of_int(FieldSpec::prime(3), 1);
    Value b = Value::of_int(FieldSpec::prime(5), 1);
    CHECK_THROWS_AS(a + b, arithmetic_error);
}
