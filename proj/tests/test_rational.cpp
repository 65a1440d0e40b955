#include <doctest.h>

#include "rational.hpp"

using joq::BigInt;
using joq::Rational;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    CHECK(Rational(BigInt(3), BigInt(6)) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(-6), BigInt(4)).to_string() == "-3/2");
    CHECK(Rational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
    CHECK(Rational(BigInt(-6), BigInt(-4)).to_string() == "3/2");
    CHECK(Rational(BigInt(0), BigInt(-7)) == Rational(0));
    CHECK(Rational(BigInt(10), BigInt(5)).is_integer());
    CHECK(Rational(BigInt(10), BigInt(5)).denominator() == 1);
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(3) / Rational(0), std::domain_error);
}

TEST_CASE("field operations") {
    Rational half(BigInt(1), BigInt(2));
    Rational third(BigInt(1), BigInt(3));
    CHECK(half + third == Rational(BigInt(5), BigInt(6)));
    CHECK(half - third == Rational(BigInt(1), BigInt(6)));
    CHECK(half * third == Rational(BigInt(1), BigInt(6)));
    CHECK(half / third == Rational(BigInt(3), BigInt(2)));
    CHECK(-half == Rational(BigInt(-1), BigInt(2)));
    CHECK(half != third);

    Rational acc;
    acc += Rational(7);
    acc *= half;
    acc -= third;
    CHECK(acc == Rational(BigInt(19), BigInt(6)));

    CHECK(2 * half == Rational(1));
    CHECK(1 - half == half);
    CHECK(7 + Rational(0) == Rational(7));
}

TEST_CASE("pow2 covers both signs exactly") {
    CHECK(Rational::pow2(0) == Rational(1));
    CHECK(Rational::pow2(10) == Rational(1024));
    CHECK(Rational::pow2(-3) == Rational(BigInt(1), BigInt(8)));
    // 2^100 does not fit in any machine word
    CHECK(Rational::pow2(100).to_string() == "1267650600228229401496703205376");
    CHECK(Rational::pow2(100) * Rational::pow2(-100) == Rational(1));
    CHECK_THROWS_AS(Rational::pow2(9'000'000), std::domain_error);
    CHECK_THROWS_AS(Rational::pow2(-9'000'000), std::domain_error);
}

TEST_CASE("string round trips") {
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(BigInt(-1), BigInt(2)).to_string() == "-1/2");
    CHECK(Rational::from_string("17/8") == Rational(BigInt(17), BigInt(8)));
    CHECK(Rational::from_string("-3/4") == Rational(BigInt(-3), BigInt(4)));
    CHECK(Rational::from_string("42") == Rational(42));
    CHECK(Rational::from_string("6/4") == Rational(BigInt(3), BigInt(2)));

    for (const char* text : {"0", "-1/2", "3", "1267650600228229401496703205376"})
        CHECK(Rational::from_string(text).to_string() == text);
}

TEST_CASE("from_string rejects junk") {
    for (const char* text : {"", "x", "1/", "/2", "1/2/3", "1.5", "1/-2", "--3", "1/0"})
        CHECK_THROWS(Rational::from_string(text));
}
