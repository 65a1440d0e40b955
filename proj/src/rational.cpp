#include "rational.hpp"

#include <cctype>
#include <cstdlib>

namespace joq {

namespace {

// Exponents are unbounded in principle; this bound only guards against
// accidental requests that would exhaust memory.
constexpr long long max_pow2_magnitude = 8'000'000;

bool is_integer_token(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::pow2(long long n) {
    const long long mag = n < 0 ? -n : n;
    if (mag > max_pow2_magnitude) throw std::domain_error("2^n exponent magnitude too large");
    BigInt p = BigInt(1) << static_cast<unsigned>(mag);
    return n >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

std::string Rational::to_string() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
}

Rational Rational::from_string(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!is_integer_token(num)) throw std::invalid_argument("bad rational literal: " + text);
    if (slash == std::string::npos) return Rational(BigInt(num));
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("bad rational literal: " + text);
    BigInt d(den);
    if (d.is_zero()) throw std::domain_error("rational with zero denominator");
    return Rational(BigInt(num), d);
}

} // namespace joq
