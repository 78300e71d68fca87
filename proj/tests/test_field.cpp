#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lialg/field.hpp"

using namespace lialg;

TEST_CASE("prime field construction") {
    CHECK_NOTHROW(FieldDescriptor::gf(2));
    CHECK_NOTHROW(FieldDescriptor::gf(2147483647)); // 2^31 - 1
    CHECK_THROWS_AS(FieldDescriptor::gf(1), BadParameters);
    CHECK_THROWS_AS(FieldDescriptor::gf(6), BadParameters);
    CHECK_THROWS_AS(FieldDescriptor::gf(-3), BadParameters);
    CHECK(FieldDescriptor::gf(5).characteristic() == 5);
    CHECK(FieldDescriptor::rationals().characteristic() == 0);
}

TEST_CASE("gf(p) arithmetic") {
    auto f = FieldDescriptor::gf(7);
    auto a = Scalar::from_int(3, f);
    auto b = Scalar::from_int(5, f);
    CHECK((a + b).residue() == 1);
    CHECK((a - b).residue() == 5);
    CHECK((a * b).residue() == 1);
    CHECK((a / b).residue() == 2); // 3 * 5^{-1} = 3 * 3 = 9 = 2
    CHECK((-a).residue() == 4);
    CHECK(a.inverse().residue() == 5);
    CHECK(a.pow(6).residue() == 1); // Fermat
    CHECK(Scalar::from_int(-1, f).residue() == 6);
    CHECK(Scalar::from_int(700, f).residue() == 0);
    CHECK_THROWS_AS(Scalar::zero(f).inverse(), DivisionByZero);
    CHECK_THROWS_AS(a / Scalar::zero(f), DivisionByZero);
}

TEST_CASE("every nonzero residue has an inverse") {
    for (std::int64_t p : {2, 3, 5, 13}) {
        auto f = FieldDescriptor::gf(p);
        for (std::int64_t v = 1; v < p; ++v) {
            auto s = Scalar::from_int(v, f);
            CHECK((s * s.inverse()).is_one());
        }
    }
}

TEST_CASE("rational arithmetic is exact") {
    auto f = FieldDescriptor::rationals();
    auto third = Scalar::from_rational(Rational(1, 3), f);
    auto sixth = Scalar::from_rational(Rational(1, 6), f);
    CHECK((third + sixth) == Scalar::from_rational(Rational(1, 2), f));
    CHECK((third * sixth) == Scalar::from_rational(Rational(1, 18), f));
    CHECK((third / sixth) == Scalar::from_int(2, f));
    CHECK((third - third).is_zero());
    // repeated summation does not drift
    auto acc = Scalar::zero(f);
    for (int i = 0; i < 3000; ++i) acc += third;
    CHECK(acc == Scalar::from_int(1000, f));
}

TEST_CASE("mixed-field operations are rejected") {
    auto a = Scalar::from_int(1, FieldDescriptor::gf(2));
    auto b = Scalar::from_int(1, FieldDescriptor::gf(3));
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(a * Scalar::one(FieldDescriptor::rationals()), FieldMismatch);
}

TEST_CASE("scalar text syntax") {
    auto q = FieldDescriptor::rationals();
    CHECK(parse_scalar("5", q) == Scalar::from_int(5, q));
    CHECK(parse_scalar("-5", q) == Scalar::from_int(-5, q));
    CHECK(parse_scalar("2/4", q) == Scalar::from_rational(Rational(1, 2), q));
    CHECK(parse_scalar("-7/3", q) == Scalar::from_rational(Rational(-7, 3), q));
    CHECK_THROWS_AS(parse_scalar("1/0", q), DivisionByZero);
    CHECK_THROWS_AS(parse_scalar("", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("x", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("1.5", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("--1", q), ParseError);

    auto f3 = FieldDescriptor::gf(3);
    CHECK(parse_scalar("5", f3).residue() == 2);
    CHECK(parse_scalar("-1", f3).residue() == 2);
    CHECK_THROWS_AS(parse_scalar("1/2", f3), RationalLiteralInPrimeField);
}

TEST_CASE("render round-trips through parse") {
    auto q = FieldDescriptor::rationals();
    for (const char* text : {"0", "7", "-7", "3/2", "-11/4"}) {
        auto s = parse_scalar(text, q);
        CHECK(render(s) == text);
        CHECK(parse_scalar(render(s), q) == s);
    }
    auto f5 = FieldDescriptor::gf(5);
    for (std::int64_t v = 0; v < 5; ++v) {
        auto s = Scalar::from_int(v, f5);
        CHECK(parse_scalar(render(s), f5) == s);
    }
}

TEST_CASE("total order is consistent") {
    auto f = FieldDescriptor::gf(5);
    CHECK(Scalar::from_int(2, f) < Scalar::from_int(3, f));
    CHECK(Scalar::from_int(3, f) == Scalar::from_int(8, f));
    auto q = FieldDescriptor::rationals();
    CHECK(Scalar::from_rational(Rational(1, 3), q) < Scalar::from_rational(Rational(1, 2), q));
}
