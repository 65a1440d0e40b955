#pragma once

// The scalar sequences K, M, X and the third-order Jacobsthal numbers,
// evaluated in closed form for any integer index.

#include "rational.hpp"

#include <string>
#include <vector>

namespace joq {

/// Periodic part of K: 2 when n = 0 (mod 3), otherwise -1. Even: M(-n) = M(n).
Rational m_val(long long n);

/// Period-3 sequence 0, 1, -1 for n = 0, 1, 2 (mod 3). Odd: X(-n) = -X(n).
Rational x_val(long long n);

/// K(n) = 2^n + M(n); integral for n >= 0, dyadic denominator for n < 0.
Rational k_val(long long n);

/**
 * Third-order Jacobsthal number with seeds 0, 1, 1 and
 * J(n+3) = J(n+2) + J(n+1) + 2 J(n), extended to negative n by running the
 * recurrence backward. Evaluated as (2^(n+1) + d(n)) / 7 with d periodic.
 */
Rational j3_val(long long n);

/**
 * Coefficients (c2, c1, c0) of the arithmetic-progression recurrence
 * J(a(n+3)+r) = c2 J(a(n+2)+r) + c1 J(a(n+1)+r) + c0 J(an+r), namely
 * (K(a), -(2^a M(a) + 1), 2^a). The middle coefficient is evaluated through
 * the cube-root-of-unity ring so the trace reduction is exercised, not assumed.
 */
struct ProgressionCoeffs {
    Rational c2, c1, c0;
};
ProgressionCoeffs progression_coeffs(long long a);

/// Evaluates one of the named sequences K, M, X, J3.
Rational seq_value(const std::string& name, long long n);

struct SeqTable {
    std::string name;
    long long lo = 0;
    long long hi = 0;
    std::vector<Rational> values;
};

/// Builds the inclusive table for a named sequence; lo must not exceed hi.
SeqTable make_seq_table(const std::string& name, long long lo, long long hi);

/// CSV with header "n,value"; exact rational rendering.
std::string render_csv(const SeqTable& table);

/// JSON array of {"n", "value"} objects; every number is a decimal string.
std::string render_json(const SeqTable& table);

/// All four sequences side by side, CSV header "n,K,M,X,J3".
std::string multi_table_csv(long long lo, long long hi);

/// JSON array form of the combined table.
std::string multi_table_json(long long lo, long long hi);

} // namespace joq
