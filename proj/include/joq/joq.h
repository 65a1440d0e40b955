#ifndef JOQ_H
#define JOQ_H

/*
 * C interface to the modified third-order Jacobsthal library.
 *
 * Every fallible function returns a joq_status and writes its result through
 * an out parameter. Out parameters are written only on JOQ_OK. Objects
 * returned through joq_rat** / joq_quat** are owned by the caller and must be
 * released with the matching *_free; strings returned through char** must be
 * released with joq_string_free.
 *
 * All arithmetic is exact: rationals are arbitrary-precision and rendered as
 * "p" or "p/q", quaternions as "r + i*I + j*J + k*K" with zero components
 * omitted.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum joq_status {
    JOQ_OK = 0,
    JOQ_ERROR_INVALID_ARGUMENT = 1, /* caller broke a precondition */
    JOQ_ERROR_DOMAIN = 2,           /* value outside the operation's domain */
    JOQ_ERROR_INTERNAL = 3          /* a library guarantee failed to hold */
} joq_status;

/* Library version, e.g. "1.0.0". Static storage; do not free. */
const char* joq_version(void);

/* Message for the most recent error on the calling thread. Static storage
 * per thread; valid until the next failing call on the same thread. */
const char* joq_last_error(void);

void joq_string_free(char* s);

/* ---------- exact rationals ---------- */

typedef struct joq_rat joq_rat;

joq_status joq_rat_from_int(long long value, joq_rat** out);
/* Accepts "p" or "p/q" with an optional leading minus on p. */
joq_status joq_rat_from_string(const char* text, joq_rat** out);
/* 2^n for any sign of n. */
joq_status joq_rat_pow2(long long n, joq_rat** out);
joq_status joq_rat_add(const joq_rat* x, const joq_rat* y, joq_rat** out);
joq_status joq_rat_sub(const joq_rat* x, const joq_rat* y, joq_rat** out);
joq_status joq_rat_mul(const joq_rat* x, const joq_rat* y, joq_rat** out);
joq_status joq_rat_div(const joq_rat* x, const joq_rat* y, joq_rat** out);
joq_status joq_rat_neg(const joq_rat* x, joq_rat** out);
joq_status joq_rat_equal(const joq_rat* x, const joq_rat* y, int* out);
joq_status joq_rat_to_string(const joq_rat* x, char** out);
void joq_rat_free(joq_rat* x);

/* ---------- scalar sequences ---------- */

/* name is one of "K", "M", "X", "J3"; any integer index n. */
joq_status joq_seq_value(const char* name, long long n, joq_rat** out);

/* Rendered table of one sequence over [lo, hi]; format "csv" or "json". */
joq_status joq_seq_table(const char* name, long long lo, long long hi,
                         const char* format, char** out);

/* All four sequences side by side over [lo, hi]. */
joq_status joq_multi_table(long long lo, long long hi, const char* format,
                           char** out);

/* ---------- quaternions ---------- */

typedef struct joq_quat joq_quat;

/* K-valued quaternion with component indices n, n+a, n+b, n+c. */
joq_status joq_quat_qk(long long n, long long a, long long b, long long c,
                       joq_quat** out);
/* The M-valued counterpart. */
joq_status joq_quat_qm(long long n, long long a, long long b, long long c,
                       joq_quat** out);
/* The constant 1 + 2^a i + 2^b j + 2^c k. */
joq_status joq_quat_theta(long long a, long long b, long long c,
                          joq_quat** out);
/* K(n) + K(n+a) i, as a quaternion with zero j and k parts. */
joq_status joq_quat_gaussian(long long n, long long a, joq_quat** out);
joq_status joq_quat_add(const joq_quat* x, const joq_quat* y, joq_quat** out);
joq_status joq_quat_sub(const joq_quat* x, const joq_quat* y, joq_quat** out);
/* Hamilton product; not commutative. */
joq_status joq_quat_mul(const joq_quat* x, const joq_quat* y, joq_quat** out);
joq_status joq_quat_conj(const joq_quat* x, joq_quat** out);
/* x * conj(x), a scalar. */
joq_status joq_quat_norm(const joq_quat* x, joq_rat** out);
/* index 0..3 selects the scalar, i, j, k component. */
joq_status joq_quat_component(const joq_quat* x, int index, joq_rat** out);
joq_status joq_quat_equal(const joq_quat* x, const joq_quat* y, int* out);
joq_status joq_quat_to_string(const joq_quat* x, char** out);
void joq_quat_free(joq_quat* x);

/* Closed-form norm of the K quaternion at n. variant selects "published"
 * (the form as stated, which overshoots the true norm by 2^(n+1) * M(n-1))
 * or "corrected" (matches the direct norm everywhere). */
joq_status joq_norm_closed(long long n, long long a, long long b, long long c,
                           const char* variant, joq_rat** out);

/* Closed form of sum_{j=0}^{n} qk(j); n must be >= 0. */
joq_status joq_sum_closed(long long n, long long a, long long b, long long c,
                          joq_quat** out);

/* ---------- generating function ---------- */

/* JSON object {"numerator_coeffs": [...], "check": bool}: the numerator
 * coefficients of the generating function and the truncated-series check at
 * the given depth (depth >= 3). */
joq_status joq_gf_report(long long a, long long b, long long c,
                         long long depth, char** out);

/* ---------- verification suite ---------- */

typedef struct joq_verify_config {
    long long n_min;
    long long n_max;
    long long series_depth; /* >= 3 */
    uint64_t seed;          /* grid sampling seed */
    const long long (*triples)[3]; /* NULL: seeded default grid */
    size_t triple_count;
    const char* const* checks; /* NULL: the full registry */
    size_t check_count;
    int inject_failure; /* nonzero: negative control, forces one failure */
} joq_verify_config;

/* Fills cfg with the defaults: n in [-10, 20], depth 16, seed 1, default
 * grid, full registry, no injected failure. */
void joq_verify_config_init(joq_verify_config* cfg);

/* Runs the configured checks. *report_json receives the JSON report;
 * *any_fail is set nonzero iff some check has status "fail"
 * ("erratum-documented" does not count). */
joq_status joq_verify_run(const joq_verify_config* cfg, char** report_json,
                          int* any_fail);

/* Newline-separated names of all registered checks, in report order. */
joq_status joq_check_registry(char** out);

#ifdef __cplusplus
}
#endif

#endif /* JOQ_H */
