#pragma once

// Generating function via truncated power series, and the matrix identity
// via exact 3x3 matrix powers.

#include "joq.hpp"

#include <array>
#include <optional>
#include <vector>

namespace joq {

/// Polynomial with cyclotomic-quaternion coefficients, trailing zeros trimmed.
struct QPoly {
    std::vector<CQuat> coeffs;

    void trim();
    long long degree() const { return static_cast<long long>(coeffs.size()) - 1; }
    CQuat coeff(std::size_t d) const { return d < coeffs.size() ? coeffs[d] : CQuat{}; }

    QPoly operator+(const QPoly& o) const;
    /// Multiplication by a scalar polynomial; scalars commute with everything.
    QPoly mul_scalar_poly(const std::vector<Cyclo>& p) const;
    bool operator==(const QPoly& o) const { return coeffs == o.coeffs; }
};

/// Constant quaternion times a scalar polynomial, as a QPoly.
QPoly qpoly_scaled(const CQuat& q, const std::vector<Cyclo>& p);

/**
 * Numerator of the generating function: the sum of the rows
 * Theta (1 + x + x^2), Phi1 (1 + (w1-1)x + 2 w2 x^2),
 * Phi2 (1 + (w2-1)x + 2 w1 x^2). Degree at most 2; every coefficient
 * rationalizes (x^0 gives QK(0), x^1 gives QK(1) - QK(0), x^2 gives 2 QK(-1)).
 */
QPoly gf_numerator(const OffsetTriple& t);

/// Diagnostic result of the truncated-series comparison.
struct GfDiagnosis {
    bool ok = true;
    long long first_bad_degree = -1;
    RQuat got, want;
};

/**
 * Forms P(x) = (1 - x - x^2 - 2x^3) * sum_{j=0..depth} qk(j) x^j and compares:
 * coefficients 0..2 against gf_numerator, 3..depth against zero. Degrees
 * depth+1..depth+3 mix truncated and untruncated terms and are ignored.
 * force_nonzero perturbs one product coefficient first (negative control).
 */
GfDiagnosis gf_series_diagnose(const OffsetTriple& t, long long depth,
                               std::optional<std::size_t> force_nonzero = std::nullopt);

/// The boolean form of gf_series_diagnose; depth must be at least 3.
bool gf_series_check(const OffsetTriple& t, long long depth);

using IntMat3 = std::array<std::array<BigInt, 3>, 3>;
using QMat3 = std::array<std::array<RQuat, 3>, 3>;

/// The order-3 recurrence companion matrix [[1,1,2],[1,0,0],[0,1,0]].
IntMat3 companion_matrix();

/// Exact power of the companion matrix by repeated squaring; n must be >= 0.
IntMat3 companion_power(long long n);

BigInt mat_det(const IntMat3& m);

/**
 * Row r (top to bottom, r = 0,1,2) is
 * [qk(n+3-r), qk(n+4-r) - qk(n+3-r), 2 qk(n+2-r)].
 */
QMat3 jmatrix(long long n, const OffsetTriple& t);

/// The same base matrix built from QM entries; the identity stated over this
/// base fails already at n = 0 and is kept only to document that failure.
QMat3 jmatrix_qm_base(const OffsetTriple& t);

QMat3 qmat_mul_int(const QMat3& q, const IntMat3& m);
bool qmat_equal(const QMat3& x, const QMat3& y);
std::string qmat_to_string(const QMat3& m);

/// True iff jmatrix(n, t) equals jmatrix(0, t) * companion_power(n).
bool matrix_identity_check(long long n, const OffsetTriple& t);

} // namespace joq
