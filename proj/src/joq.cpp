#include "joq.hpp"

namespace joq {

namespace {

// Keeps n + offset and 2(n + offset) far from signed overflow; values this
// large already exhaust memory inside pow2 long before the limit matters.
constexpr long long index_limit = 2'000'000'000;

void check_index(long long n) {
    if (n > index_limit || n < -index_limit)
        throw std::invalid_argument("sequence index magnitude too large");
}

void check_args(long long n, const OffsetTriple& t) {
    check_index(n);
    check_index(t.a);
    check_index(t.b);
    check_index(t.c);
}

Rational two() { return Rational(2); }

} // namespace

RQuat qk(long long n, const OffsetTriple& t) {
    check_args(n, t);
    return {k_val(n), k_val(n + t.a), k_val(n + t.b), k_val(n + t.c)};
}

RQuat qm(long long n, const OffsetTriple& t) {
    check_args(n, t);
    return {m_val(n), m_val(n + t.a), m_val(n + t.b), m_val(n + t.c)};
}

BasisSet basis(const OffsetTriple& t) {
    check_args(0, t);
    RQuat theta{Rational(1), Rational::pow2(t.a), Rational::pow2(t.b), Rational::pow2(t.c)};
    CQuat phi1{Cyclo(1), Cyclo::omega_pow(t.a), Cyclo::omega_pow(t.b), Cyclo::omega_pow(t.c)};
    CQuat phi2 = phi1.map([](const Cyclo& s) { return s.conj(); });
    return {theta, phi1, phi2};
}

RQuat binet_qk(long long n, const OffsetTriple& t) {
    check_args(n, t);
    BasisSet bs = basis(t);
    Cyclo w1n = Cyclo::omega_pow(n);
    CQuat sum = scalar_mul(Cyclo(Rational::pow2(n)), to_cyclo(bs.theta))
              + scalar_mul(w1n, bs.phi1)
              + scalar_mul(w1n.conj(), bs.phi2);
    return rationalize(sum, "binet_qk");
}

RQuat binet_qm(long long n, const OffsetTriple& t) {
    check_args(n, t);
    BasisSet bs = basis(t);
    Cyclo w1n = Cyclo::omega_pow(n);
    return rationalize(scalar_mul(w1n, bs.phi1) + scalar_mul(w1n.conj(), bs.phi2), "binet_qm");
}

RQuat qm_linear_form(long long n, const OffsetTriple& t) {
    check_args(n, t);
    RQuat lead{Rational(1), x_val(t.a + 1), x_val(t.b + 1), x_val(t.c + 1)};
    RQuat trail{Rational(0), x_val(t.a), x_val(t.b), x_val(t.c)};
    return scalar_mul(m_val(n), lead) - scalar_mul(m_val(n - 1), trail);
}

RQuat qk_negative_closed(long long n, const OffsetTriple& t) {
    if (n < 0) throw std::invalid_argument("qk_negative_closed expects n >= 0");
    check_args(n, t);
    BasisSet bs = basis(t);
    RQuat lead{Rational(1), -x_val(t.a - 1), -x_val(t.b - 1), -x_val(t.c - 1)};
    RQuat trail{Rational(0), x_val(t.a), x_val(t.b), x_val(t.c)};
    return scalar_mul(Rational::pow2(-n), bs.theta)
         + scalar_mul(m_val(n), lead)
         + scalar_mul(m_val(n - 1), trail);
}

Rational theta_norm(const OffsetTriple& t) {
    check_args(0, t);
    return Rational(1) + Rational::pow2(2 * t.a) + Rational::pow2(2 * t.b) + Rational::pow2(2 * t.c);
}

Rational norm_direct(long long n, const OffsetTriple& t) {
    RQuat q = qk(n, t);
    return q.r * q.r + q.i * q.i + q.j * q.j + q.k * q.k;
}

Rational norm_closed(long long n, const OffsetTriple& t, NormVariant variant) {
    check_args(n, t);
    Rational p2a = Rational::pow2(t.a), p2b = Rational::pow2(t.b), p2c = Rational::pow2(t.c);
    Rational lead_factor = Rational(1) + p2a * x_val(t.a + 1) + p2b * x_val(t.b + 1) + p2c * x_val(t.c + 1);
    Rational trail_factor = p2a * x_val(t.a) + p2b * x_val(t.b) + p2c * x_val(t.c);
    if (variant == NormVariant::published) trail_factor = Rational(1) + trail_factor;
    return Rational::pow2(2 * n) * theta_norm(t)
         + Rational::pow2(n + 1) * m_val(n) * lead_factor
         - Rational::pow2(n + 1) * m_val(n - 1) * trail_factor
         + m_val(2 * n) + m_val(2 * (n + t.a)) + m_val(2 * (n + t.b)) + m_val(2 * (n + t.c))
         + Rational(8);
}

RQuat sum_direct(long long n, const OffsetTriple& t) {
    if (n < 0) throw std::invalid_argument("sum_direct expects n >= 0");
    RQuat acc = qk(0, t);
    for (long long j = 1; j <= n; ++j) acc = acc + qk(j, t);
    return acc;
}

RQuat sum_closed(long long n, const OffsetTriple& t) {
    if (n < 0) throw std::invalid_argument("sum_closed expects n >= 0");
    check_args(n, t);
    BasisSet bs = basis(t);
    Cyclo w1 = Cyclo::omega(), w2 = w1.conj();
    CQuat brace = to_cyclo(qk(n + 2, t) + scalar_mul(two(), qk(n, t)))
                - scalar_mul(Cyclo(3), to_cyclo(bs.theta))
                + scalar_mul(Cyclo(1) - w2, bs.phi1)
                + scalar_mul(Cyclo(1) - w1, bs.phi2);
    RQuat brace_r = rationalize(brace, "sum_closed");

    RQuat brace_via_proof = qk(n + 2, t) + scalar_mul(two(), qk(n, t)) + qk(0, t) - qk(2, t);
    if (brace_r != brace_via_proof)
        throw internal_error("sum_closed: constant -3*Theta + (1-w2)Phi1 + (1-w1)Phi2 differs from QK(0) - QK(2)");

    auto third = [](const Rational& v) {
        if (v.numerator() % 3 != 0)
            throw internal_error("sum_closed: brace component not divisible by 3: " + v.to_string());
        return v / Rational(3);
    };
    return brace_r.map(third);
}

CassiniSides cassini_sides(long long n, const OffsetTriple& t) {
    if (n < 1) throw std::invalid_argument("cassini_sides expects n >= 1");
    check_args(n, t);
    RQuat theta = basis(t).theta;
    RQuat qkn = qk(n, t);
    RQuat lhs = qk(n + 1, t) * qk(n - 1, t) - qkn * qkn;
    RQuat qmn = qm(n, t);
    RQuat rhs = qm(n + 1, t) * qm(n - 1, t) - qmn * qmn
              + scalar_mul(Rational::pow2(n), theta * (scalar_mul(two(), qm(n + 2, t)) - qmn))
              + scalar_mul(Rational::pow2(n - 1), (qm(n + 1, t) - scalar_mul(two(), qmn)) * theta);
    return {lhs, rhs};
}

RQuat gaussian(long long n, long long a) {
    check_index(n);
    check_index(a);
    return {k_val(n), k_val(n + a), Rational(0), Rational(0)};
}

} // namespace joq
