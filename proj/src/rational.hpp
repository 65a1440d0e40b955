#pragma once

// Exact arbitrary-precision rationals, always kept in canonical form.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace joq {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Arbitrary-precision rational in lowest terms with positive denominator.
 * Backed by boost::multiprecision::cpp_rational, which maintains the
 * canonical form after every operation.
 */
class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) : v_(make_canonical(num, den)) {}

    Rational operator-() const { return Rational(-v_); }
    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.v_.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(v_ / o.v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    /// 2^n for any integer n, including negative exponents.
    static Rational pow2(long long n);

    /// Canonical text: "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    /// Parses the canonical text form; rejects anything else.
    static Rational from_string(const std::string& text);

private:
    using Backend = boost::multiprecision::cpp_rational;

    explicit Rational(Backend v) : v_(std::move(v)) {}

    static Backend make_canonical(BigInt num, BigInt den) {
        if (den.is_zero()) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        return Backend(num, den);
    }

    Backend v_;
};

inline Rational operator+(long long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

} // namespace joq
