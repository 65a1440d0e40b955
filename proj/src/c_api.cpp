#include <joq/joq.h>

#include "verify.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct joq_rat {
    joq::Rational v;
};

struct joq_quat {
    joq::RQuat v;
};

namespace {

thread_local std::string g_last_error;

joq_status set_error(joq_status s, const char* what) {
    g_last_error = what;
    return s;
}

/// Runs f, translating exceptions into status codes. internal_error means a
/// library guarantee broke; invalid_argument and domain_error are the
/// caller's; anything else is treated as internal.
template <class F>
joq_status guarded(F&& f) {
    try {
        f();
        return JOQ_OK;
    } catch (const joq::internal_error& e) {
        return set_error(JOQ_ERROR_INTERNAL, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(JOQ_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return set_error(JOQ_ERROR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return set_error(JOQ_ERROR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

joq_status null_argument() {
    return set_error(JOQ_ERROR_INVALID_ARGUMENT, "null pointer argument");
}

joq_status make_rat(joq_rat** out, joq::Rational v) {
    *out = new joq_rat{std::move(v)};
    return JOQ_OK;
}

joq_status make_quat(joq_quat** out, joq::RQuat v) {
    *out = new joq_quat{std::move(v)};
    return JOQ_OK;
}

joq::NormVariant parse_variant(const char* variant) {
    std::string v(variant);
    if (v == "published") return joq::NormVariant::published;
    if (v == "corrected") return joq::NormVariant::corrected;
    throw std::invalid_argument("unknown norm variant: " + v);
}

} // namespace

extern "C" {

const char* joq_version(void) { return joq::artifact_version; }

const char* joq_last_error(void) { return g_last_error.c_str(); }

void joq_string_free(char* s) { std::free(s); }

/* ---------- rationals ---------- */

joq_status joq_rat_from_int(long long value, joq_rat** out) {
    if (!out) return null_argument();
    return guarded([&] { make_rat(out, joq::Rational(value)); });
}

joq_status joq_rat_from_string(const char* text, joq_rat** out) {
    if (!text || !out) return null_argument();
    return guarded([&] { make_rat(out, joq::Rational::from_string(text)); });
}

joq_status joq_rat_pow2(long long n, joq_rat** out) {
    if (!out) return null_argument();
    return guarded([&] { make_rat(out, joq::Rational::pow2(n)); });
}

joq_status joq_rat_add(const joq_rat* x, const joq_rat* y, joq_rat** out) {
    if (!x || !y || !out) return null_argument();
    return guarded([&] { make_rat(out, x->v + y->v); });
}

joq_status joq_rat_sub(const joq_rat* x, const joq_rat* y, joq_rat** out) {
    if (!x || !y || !out) return null_argument();
    return guarded([&] { make_rat(out, x->v - y->v); });
}

joq_status joq_rat_mul(const joq_rat* x, const joq_rat* y, joq_rat** out) {
    if (!x || !y || !out) return null_argument();
    return guarded([&] { make_rat(out, x->v * y->v); });
}

joq_status joq_rat_div(const joq_rat* x, const joq_rat* y, joq_rat** out) {
    if (!x || !y || !out) return null_argument();
    return guarded([&] { make_rat(out, x->v / y->v); });
}

joq_status joq_rat_neg(const joq_rat* x, joq_rat** out) {
    if (!x || !out) return null_argument();
    return guarded([&] { make_rat(out, -x->v); });
}

joq_status joq_rat_equal(const joq_rat* x, const joq_rat* y, int* out) {
    if (!x || !y || !out) return null_argument();
    return guarded([&] { *out = x->v == y->v ? 1 : 0; });
}

joq_status joq_rat_to_string(const joq_rat* x, char** out) {
    if (!x || !out) return null_argument();
    return guarded([&] { *out = dup_string(x->v.to_string()); });
}

void joq_rat_free(joq_rat* x) { delete x; }

/* ---------- sequences ---------- */

joq_status joq_seq_value(const char* name, long long n, joq_rat** out) {
    if (!name || !out) return null_argument();
    return guarded([&] { make_rat(out, joq::seq_value(name, n)); });
}

static std::string render_one(const joq::SeqTable& table, const std::string& format) {
    if (format == "csv") return joq::render_csv(table);
    if (format == "json") return joq::render_json(table);
    throw std::invalid_argument("unknown format: " + format);
}

joq_status joq_seq_table(const char* name, long long lo, long long hi,
                         const char* format, char** out) {
    if (!name || !format || !out) return null_argument();
    return guarded([&] { *out = dup_string(render_one(joq::make_seq_table(name, lo, hi), format)); });
}

joq_status joq_multi_table(long long lo, long long hi, const char* format, char** out) {
    if (!format || !out) return null_argument();
    return guarded([&] {
        std::string f(format);
        if (f == "csv")
            *out = dup_string(joq::multi_table_csv(lo, hi));
        else if (f == "json")
            *out = dup_string(joq::multi_table_json(lo, hi));
        else
            throw std::invalid_argument("unknown format: " + f);
    });
}

/* ---------- quaternions ---------- */

joq_status joq_quat_qk(long long n, long long a, long long b, long long c, joq_quat** out) {
    if (!out) return null_argument();
    return guarded([&] { make_quat(out, joq::qk(n, {a, b, c})); });
}

joq_status joq_quat_qm(long long n, long long a, long long b, long long c, joq_quat** out) {
    if (!out) return null_argument();
    return guarded([&] { make_quat(out, joq::qm(n, {a, b, c})); });
}

joq_status joq_quat_theta(long long a, long long b, long long c, joq_quat** out) {
    if (!out) return null_argument();
    return guarded([&] { make_quat(out, joq::basis({a, b, c}).theta); });
}

joq_status joq_quat_gaussian(long long n, long long a, joq_quat** out) {
    if (!out) return null_argument();
    return guarded([&] { make_quat(out, joq::gaussian(n, a)); });
}

joq_status joq_quat_add(const joq_quat* x, const joq_quat* y, joq_quat** out) {
    if (!x || !y || !out) return null_argument();
    return guarded([&] { make_quat(out, x->v + y->v); });
}

joq_status joq_quat_sub(const joq_quat* x, const joq_quat* y, joq_quat** out) {
    if (!x || !y || !out) return null_argument();
    return guarded([&] { make_quat(out, x->v - y->v); });
}

joq_status joq_quat_mul(const joq_quat* x, const joq_quat* y, joq_quat** out) {
    if (!x || !y || !out) return null_argument();
    return guarded([&] { make_quat(out, x->v * y->v); });
}

joq_status joq_quat_conj(const joq_quat* x, joq_quat** out) {
    if (!x || !out) return null_argument();
    return guarded([&] { make_quat(out, x->v.conj()); });
}

joq_status joq_quat_norm(const joq_quat* x, joq_rat** out) {
    if (!x || !out) return null_argument();
    return guarded([&] { make_rat(out, joq::quat_norm(x->v)); });
}

joq_status joq_quat_component(const joq_quat* x, int index, joq_rat** out) {
    if (!x || !out) return null_argument();
    return guarded([&] {
        switch (index) {
            case 0: make_rat(out, x->v.r); break;
            case 1: make_rat(out, x->v.i); break;
            case 2: make_rat(out, x->v.j); break;
            case 3: make_rat(out, x->v.k); break;
            default: throw std::invalid_argument("component index must be 0..3");
        }
    });
}

joq_status joq_quat_equal(const joq_quat* x, const joq_quat* y, int* out) {
    if (!x || !y || !out) return null_argument();
    return guarded([&] { *out = x->v == y->v ? 1 : 0; });
}

joq_status joq_quat_to_string(const joq_quat* x, char** out) {
    if (!x || !out) return null_argument();
    return guarded([&] { *out = dup_string(joq::to_string(x->v)); });
}

void joq_quat_free(joq_quat* x) { delete x; }

joq_status joq_norm_closed(long long n, long long a, long long b, long long c,
                           const char* variant, joq_rat** out) {
    if (!variant || !out) return null_argument();
    return guarded([&] { make_rat(out, joq::norm_closed(n, {a, b, c}, parse_variant(variant))); });
}

joq_status joq_sum_closed(long long n, long long a, long long b, long long c, joq_quat** out) {
    if (!out) return null_argument();
    return guarded([&] { make_quat(out, joq::sum_closed(n, {a, b, c})); });
}

/* ---------- generating function ---------- */

joq_status joq_gf_report(long long a, long long b, long long c, long long depth, char** out) {
    if (!out) return null_argument();
    return guarded([&] {
        joq::OffsetTriple t{a, b, c};
        bool ok = joq::gf_series_check(t, depth); // validates depth first
        joq::QPoly num = joq::gf_numerator(t);
        nlohmann::ordered_json j;
        j["numerator_coeffs"] = nlohmann::ordered_json::array();
        for (std::size_t d = 0; d < 3; ++d)
            j["numerator_coeffs"].push_back(
                joq::to_string(joq::rationalize(num.coeff(d), "gf_numerator")));
        j["check"] = ok;
        *out = dup_string(j.dump(2) + "\n");
    });
}

/* ---------- verification ---------- */

void joq_verify_config_init(joq_verify_config* cfg) {
    if (!cfg) return;
    joq::SuiteConfig d;
    cfg->n_min = d.n_min;
    cfg->n_max = d.n_max;
    cfg->series_depth = d.series_depth;
    cfg->seed = d.seed;
    cfg->triples = nullptr;
    cfg->triple_count = 0;
    cfg->checks = nullptr;
    cfg->check_count = 0;
    cfg->inject_failure = 0;
}

joq_status joq_verify_run(const joq_verify_config* cfg, char** report_json, int* any_fail) {
    if (!cfg || !report_json || !any_fail) return null_argument();
    return guarded([&] {
        joq::SuiteConfig sc;
        sc.n_min = cfg->n_min;
        sc.n_max = cfg->n_max;
        sc.series_depth = cfg->series_depth;
        sc.seed = cfg->seed;
        sc.inject_failure = cfg->inject_failure != 0;
        if (cfg->triple_count > 0 && !cfg->triples)
            throw std::invalid_argument("triples is null with nonzero triple_count");
        for (size_t idx = 0; idx < cfg->triple_count; ++idx)
            sc.triples.push_back({cfg->triples[idx][0], cfg->triples[idx][1], cfg->triples[idx][2]});
        if (cfg->check_count > 0 && !cfg->checks)
            throw std::invalid_argument("checks is null with nonzero check_count");
        for (size_t idx = 0; idx < cfg->check_count; ++idx) {
            if (!cfg->checks[idx]) throw std::invalid_argument("null check name");
            sc.checks.emplace_back(cfg->checks[idx]);
        }
        joq::VerificationReport report = joq::run_suite(sc);
        *report_json = dup_string(joq::report_to_json(report));
        *any_fail = report.any_fail() ? 1 : 0;
    });
}

joq_status joq_check_registry(char** out) {
    if (!out) return null_argument();
    return guarded([&] {
        std::string joined;
        for (const std::string& name : joq::check_registry()) {
            joined += name;
            joined += '\n';
        }
        *out = dup_string(joined);
    });
}

} /* extern "C" */
