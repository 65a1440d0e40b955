#include <doctest.h>

#include "cyclo.hpp"

using joq::Cyclo;
using joq::Rational;

TEST_CASE("omega satisfies w^2 + w + 1 = 0") {
    Cyclo w = Cyclo::omega();
    CHECK(w * w + w + Cyclo(1) == Cyclo(0));
    CHECK(w * w == Cyclo(Rational(-1), Rational(-1)));
    CHECK(w * w * w == Cyclo(1));
}

TEST_CASE("omega_pow is periodic with period 3 in both directions") {
    Cyclo w = Cyclo::omega();
    for (long long n = -9; n <= 9; ++n) {
        CHECK(Cyclo::omega_pow(n) == Cyclo::omega_pow(n + 3));
        CHECK(Cyclo::omega_pow(n) * Cyclo::omega_pow(-n) == Cyclo(1));
    }
    CHECK(Cyclo::omega_pow(0) == Cyclo(1));
    CHECK(Cyclo::omega_pow(1) == w);
    CHECK(Cyclo::omega_pow(2) == w.conj());
    CHECK(Cyclo::omega_pow(-1) == w * w);
}

TEST_CASE("conjugation swaps the two primitive roots") {
    Cyclo w = Cyclo::omega();
    CHECK(w.conj() == w * w);
    CHECK(w * w.conj() == Cyclo(1));
    CHECK(w + w.conj() == Cyclo(-1));
    CHECK(w.conj().conj() == w);

    // conj is a ring homomorphism
    Cyclo x(Rational(2), Rational(-3)), y(Rational(-1), Rational(5));
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
}

TEST_CASE("ring operations against hand expansion") {
    // (1 + 2w)(3 - w) = 3 - w + 6w - 2w^2 = 3 + 5w - 2(-1 - w) = 5 + 7w
    Cyclo p(Rational(1), Rational(2)), q(Rational(3), Rational(-1));
    CHECK(p * q == Cyclo(Rational(5), Rational(7)));
    CHECK(p + q == Cyclo(Rational(4), Rational(1)));
    CHECK(p - q == Cyclo(Rational(-2), Rational(3)));
    CHECK(-p == Cyclo(Rational(-1), Rational(-2)));
    // norm of 1 + 2w: (1 + 2w)(1 + 2 conj(w)) = 1 + 2(w + conj(w)) + 4 = 3
    CHECK(p * p.conj() == Cyclo(3));
}

TEST_CASE("rational extraction guards the omega coefficient") {
    Cyclo plain(Rational(7), Rational(0));
    CHECK(plain.is_rational());
    CHECK(plain.rational_part() == Rational(7));
    CHECK_FALSE(Cyclo::omega().is_rational());
    CHECK_THROWS_AS(Cyclo::omega().rational_part(), std::domain_error);
    CHECK(Cyclo(0).is_zero());
    CHECK_FALSE(plain.is_zero());
}

TEST_CASE("canonical text") {
    CHECK(Cyclo(5).to_string() == "5");
    CHECK(Cyclo::omega().to_string() == "0+1*w");
    CHECK(Cyclo(Rational(-1), Rational(-1)).to_string() == "-1-1*w");
    CHECK(Cyclo(Rational(1, 2), Rational(-3)).to_string() == "1/2-3*w");
}
