#pragma once

// Exact arithmetic in Q[w]/(w^2 + w + 1), w a primitive cube root of unity.
// Elements are a + b*w; conjugation swaps w with w^2 = -1 - w.

#include "rational.hpp"

#include <string>

namespace joq {

/**
 * Element a + b*w with rational a, b, reduced by w^2 = -1 - w.
 * Conjugation swaps the two primitive cube roots of unity and is a ring
 * automorphism; an element is rational exactly when its w coefficient is zero.
 */
class Cyclo {
public:
    Cyclo() = default;
    Cyclo(long long n) : one_(n) {}
    Cyclo(Rational one) : one_(std::move(one)) {}
    Cyclo(Rational one, Rational om) : one_(std::move(one)), om_(std::move(om)) {}

    static Cyclo omega() { return Cyclo(Rational(0), Rational(1)); }

    /// w^n for any integer n; periodic with period 3.
    static Cyclo omega_pow(long long n);

    Cyclo operator-() const { return Cyclo(-one_, -om_); }
    Cyclo operator+(const Cyclo& o) const { return Cyclo(one_ + o.one_, om_ + o.om_); }
    Cyclo operator-(const Cyclo& o) const { return Cyclo(one_ - o.one_, om_ - o.om_); }

    // (a + b*w)(c + d*w) = ac + (ad + bc)w + bd*w^2, then w^2 = -1 - w.
    Cyclo operator*(const Cyclo& o) const {
        Rational bd = om_ * o.om_;
        return Cyclo(one_ * o.one_ - bd, one_ * o.om_ + om_ * o.one_ - bd);
    }

    bool operator==(const Cyclo& o) const { return one_ == o.one_ && om_ == o.om_; }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    /// Maps w to its conjugate root: a + b*w  ->  (a - b) - b*w.
    Cyclo conj() const { return Cyclo(one_ - om_, -om_); }

    bool is_zero() const { return one_.is_zero() && om_.is_zero(); }
    bool is_rational() const { return om_.is_zero(); }

    /// The value as a Rational; the w coefficient must be zero.
    Rational rational_part() const {
        if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + to_string());
        return one_;
    }

    const Rational& coeff_one() const { return one_; }
    const Rational& coeff_omega() const { return om_; }

    /// Canonical text: "a" when the w coefficient is zero, else "a+b*w".
    std::string to_string() const;

private:
    Rational one_;
    Rational om_;
};

} // namespace joq
