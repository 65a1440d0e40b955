#pragma once

// Check registry over parameter grids, with machine-readable reports.
//
// Every identity the library implements is re-verified here against direct
// evaluation. Two closed forms are known to disagree with direct computation
// in an exactly characterized way; those surface with status
// "erratum-documented" instead of "fail" so a correct build still exits
// green while the counterexamples stay on record.

#include "series_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace joq {

inline constexpr const char* artifact_version = "1.0.0";

struct SuiteConfig {
    long long n_min = -10;
    long long n_max = 20;
    long long series_depth = 16;
    std::uint64_t seed = 1;
    std::vector<OffsetTriple> triples; // empty: the default seeded grid
    std::vector<std::string> checks;   // empty: the whole registry
    bool inject_failure = false;       // negative control: perturbs one series coefficient
};

/**
 * The offset grid: all of {-2..3}^3 sampled to 60 seeded triples plus the
 * canonical (1,2,3), (0,0,0), (1,0,-1), sorted; 63 distinct triples total.
 */
std::vector<OffsetTriple> default_grid(std::uint64_t seed);

enum class CheckStatus { pass, fail, erratum_documented };
const char* to_string(CheckStatus s);

struct Counterexample {
    long long n = 0;
    OffsetTriple offsets;
    std::string lhs, rhs;
};

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    long long cases_run = 0;
    std::vector<Counterexample> counterexamples; // capped; empty iff status is pass
};

struct VerificationReport {
    std::string version;
    SuiteConfig config; // resolved: triples and checks filled in
    std::vector<CheckResult> checks;

    bool any_fail() const;
};

/// Registry names in report order.
const std::vector<std::string>& check_registry();

/// Runs the selected checks; throws std::invalid_argument on a bad config.
VerificationReport run_suite(const SuiteConfig& config);

/// Deterministic JSON: numbers rendered as decimal strings, never floats.
std::string report_to_json(const VerificationReport& report);

} // namespace joq
