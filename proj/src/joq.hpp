#pragma once

// Quaternions whose components are K values at arbitrary offsets (a, b, c),
// and the closed forms that evaluate them: the Binet decomposition over the
// omega ring, the negative-index form, norms, partial sums, and the
// Cassini-like product identity. Everything here is exact; any omega
// component that fails to cancel is an internal error, not a rounding.

#include "quaternion.hpp"
#include "sequences.hpp"

#include <compare>

namespace joq {

/// Component offsets (a, b, c) for the I, J, K slots; any signs allowed.
struct OffsetTriple {
    long long a = 0, b = 0, c = 0;
    friend auto operator<=>(const OffsetTriple&, const OffsetTriple&) = default;
};

/// QK(n) = K(n) + K(n+a) I + K(n+b) J + K(n+c) K.
RQuat qk(long long n, const OffsetTriple& t);

/// QM(n): the periodic part, M(n) + M(n+a) I + M(n+b) J + M(n+c) K.
RQuat qm(long long n, const OffsetTriple& t);

/**
 * Constants of the decomposition QK(n) = 2^n Theta + w1^n Phi1 + w2^n Phi2.
 * Theta is rational; Phi2 is the componentwise conjugate of Phi1.
 */
struct BasisSet {
    RQuat theta;
    CQuat phi1;
    CQuat phi2;
};
BasisSet basis(const OffsetTriple& t);

/**
 * Evaluates the decomposition in cyclotomic quaternions and extracts the
 * rational result. The omega components cancel for every integer n; a
 * survivor raises internal_error.
 */
RQuat binet_qk(long long n, const OffsetTriple& t);

/// QM(n) recovered from w1^n Phi1 + w2^n Phi2 alone; used as a cross-check.
RQuat binet_qm(long long n, const OffsetTriple& t);

/// QM(n) written as M(n)(1 + X(a+1)I + X(b+1)J + X(c+1)K) - M(n-1)(X(a)I + X(b)J + X(c)K).
RQuat qm_linear_form(long long n, const OffsetTriple& t);

/// Closed form for QK(-n), n >= 0: 2^-n Theta + M-part built from X values.
RQuat qk_negative_closed(long long n, const OffsetTriple& t);

/// Norm of Theta: 1 + 2^2a + 2^2b + 2^2c.
Rational theta_norm(const OffsetTriple& t);

/// Sum of the four squared components of qk(n, t).
Rational norm_direct(long long n, const OffsetTriple& t);

/**
 * Closed form for the norm. The published form carries a spurious "1+" in
 * the M(n-1) factor and disagrees with norm_direct by exactly
 * -2^(n+1) M(n-1); the corrected form drops that 1 and agrees everywhere.
 */
enum class NormVariant { published, corrected };
Rational norm_closed(long long n, const OffsetTriple& t, NormVariant variant);

/// QK(0) + ... + QK(n), n >= 0, by direct addition.
RQuat sum_direct(long long n, const OffsetTriple& t);

/**
 * The summation closed form (1/3){QK(n+2) + 2 QK(n) - 3 Theta +
 * (1-w2) Phi1 + (1-w1) Phi2}. Also evaluates the equivalent constant
 * QK(0) - QK(2) and demands the two routes agree; the division by 3 must be
 * exact. Either failure raises internal_error.
 */
RQuat sum_closed(long long n, const OffsetTriple& t);

/// Both sides of the Cassini-like identity at n >= 1; Theta multiplies the
/// first correction term on the left and the second on the right.
struct CassiniSides {
    RQuat lhs, rhs;
};
CassiniSides cassini_sides(long long n, const OffsetTriple& t);

/// The complex-valued special case: K(n) + K(n+a) I with zero J, K slots.
RQuat gaussian(long long n, long long a);

} // namespace joq
