#include "series_matrix.hpp"

namespace joq {

namespace {

const std::vector<Rational>& denominator_coeffs() {
    static const std::vector<Rational> d{Rational(1), Rational(-1), Rational(-1), Rational(-2)};
    return d; // 1 - x - x^2 - 2x^3
}

} // namespace

void QPoly::trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly out;
    out.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()));
    for (std::size_t d = 0; d < out.coeffs.size(); ++d) out.coeffs[d] = coeff(d) + o.coeff(d);
    out.trim();
    return out;
}

QPoly QPoly::mul_scalar_poly(const std::vector<Cyclo>& p) const {
    QPoly out;
    if (coeffs.empty() || p.empty()) return out;
    out.coeffs.resize(coeffs.size() + p.size() - 1);
    for (std::size_t d = 0; d < coeffs.size(); ++d)
        for (std::size_t e = 0; e < p.size(); ++e)
            out.coeffs[d + e] = out.coeffs[d + e] + scalar_mul(p[e], coeffs[d]);
    out.trim();
    return out;
}

QPoly qpoly_scaled(const CQuat& q, const std::vector<Cyclo>& p) {
    QPoly out;
    out.coeffs.reserve(p.size());
    for (const Cyclo& s : p) out.coeffs.push_back(scalar_mul(s, q));
    out.trim();
    return out;
}

QPoly gf_numerator(const OffsetTriple& t) {
    BasisSet bs = basis(t);
    Cyclo one(1), two(2);
    Cyclo w1 = Cyclo::omega(), w2 = w1.conj();
    QPoly theta_row = qpoly_scaled(to_cyclo(bs.theta), {one, one, one});
    QPoly phi1_row = qpoly_scaled(bs.phi1, {one, w1 - one, two * w2});
    QPoly phi2_row = qpoly_scaled(bs.phi2, {one, w2 - one, two * w1});
    return theta_row + phi1_row + phi2_row;
}

GfDiagnosis gf_series_diagnose(const OffsetTriple& t, long long depth,
                               std::optional<std::size_t> force_nonzero) {
    if (depth < 3) throw std::invalid_argument("series depth must be at least 3");

    std::vector<RQuat> series;
    series.reserve(static_cast<std::size_t>(depth) + 1);
    for (long long j = 0; j <= depth; ++j) series.push_back(qk(j, t));

    const auto& den = denominator_coeffs();
    std::vector<RQuat> product(series.size());
    for (std::size_t m = 0; m < product.size(); ++m)
        for (std::size_t e = 0; e <= std::min<std::size_t>(3, m); ++e)
            product[m] = product[m] + scalar_mul(den[e], series[m - e]);

    if (force_nonzero && *force_nonzero < product.size())
        product[*force_nonzero].r += Rational(1);

    QPoly num = gf_numerator(t);
    for (std::size_t d = 0; d <= static_cast<std::size_t>(depth); ++d) {
        RQuat want = d <= 2 ? rationalize(num.coeff(d), "gf_numerator") : RQuat{};
        if (product[d] != want) return {false, static_cast<long long>(d), product[d], want};
    }
    return {};
}

bool gf_series_check(const OffsetTriple& t, long long depth) {
    return gf_series_diagnose(t, depth).ok;
}

IntMat3 companion_matrix() {
    return {{{BigInt(1), BigInt(1), BigInt(2)},
             {BigInt(1), BigInt(0), BigInt(0)},
             {BigInt(0), BigInt(1), BigInt(0)}}};
}

namespace {

IntMat3 identity_mat() {
    IntMat3 m{};
    for (int d = 0; d < 3; ++d) m[d][d] = 1;
    return m;
}

IntMat3 mat_mul(const IntMat3& x, const IntMat3& y) {
    IntMat3 out{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            for (int k = 0; k < 3; ++k) out[r][c] += x[r][k] * y[k][c];
    return out;
}

} // namespace

IntMat3 companion_power(long long n) {
    if (n < 0) throw std::invalid_argument("companion_power expects n >= 0");
    IntMat3 result = identity_mat();
    IntMat3 base = companion_matrix();
    while (n > 0) {
        if (n & 1) result = mat_mul(result, base);
        base = mat_mul(base, base);
        n >>= 1;
    }
    return result;
}

BigInt mat_det(const IntMat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

QMat3 jmatrix(long long n, const OffsetTriple& t) {
    QMat3 out;
    for (long long r = 0; r < 3; ++r) {
        out[static_cast<std::size_t>(r)] = {qk(n + 3 - r, t),
                                            qk(n + 4 - r, t) - qk(n + 3 - r, t),
                                            scalar_mul(Rational(2), qk(n + 2 - r, t))};
    }
    return out;
}

QMat3 jmatrix_qm_base(const OffsetTriple& t) {
    QMat3 out;
    for (long long r = 0; r < 3; ++r) {
        out[static_cast<std::size_t>(r)] = {qm(3 - r, t),
                                            qm(4 - r, t) - qm(3 - r, t),
                                            scalar_mul(Rational(2), qm(2 - r, t))};
    }
    return out;
}

QMat3 qmat_mul_int(const QMat3& q, const IntMat3& m) {
    QMat3 out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            RQuat acc;
            for (int k = 0; k < 3; ++k) acc = acc + scalar_mul(Rational(m[k][c]), q[r][k]);
            out[r][c] = acc;
        }
    return out;
}

bool qmat_equal(const QMat3& x, const QMat3& y) {
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (x[r][c] != y[r][c]) return false;
    return true;
}

std::string qmat_to_string(const QMat3& m) {
    std::string out = "[";
    for (int r = 0; r < 3; ++r) {
        out += r ? ", [" : "[";
        for (int c = 0; c < 3; ++c) {
            if (c) out += ", ";
            out += to_string(m[r][c]);
        }
        out += "]";
    }
    return out + "]";
}

bool matrix_identity_check(long long n, const OffsetTriple& t) {
    if (n < 0) throw std::invalid_argument("matrix_identity_check expects n >= 0");
    return qmat_equal(jmatrix(n, t), qmat_mul_int(jmatrix(0, t), companion_power(n)));
}

} // namespace joq
