// Command-line front end. Links only the C API so the shared library's
// interface gets exercised end to end on every invocation.

#include <joq/joq.h>

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

int api_error() {
    std::fprintf(stderr, "error: %s\n", joq_last_error());
    return 2;
}

/// Prints an owned C string and releases it.
void print_owned(char* text, bool add_newline) {
    std::fputs(text, stdout);
    if (add_newline) std::fputc('\n', stdout);
    joq_string_free(text);
}

int run_seq(const std::string& name, long long from, long long to, const std::string& format) {
    char* out = nullptr;
    if (joq_seq_table(name.c_str(), from, to, format.c_str(), &out) != JOQ_OK) return api_error();
    print_owned(out, false);
    return 0;
}

int run_table(long long from, long long to, const std::string& format) {
    char* out = nullptr;
    if (joq_multi_table(from, to, format.c_str(), &out) != JOQ_OK) return api_error();
    print_owned(out, false);
    return 0;
}

int run_quat(long long n, const std::vector<long long>& abc, bool has_gauss, long long gauss_a,
             const std::string& what) {
    joq_quat* q = nullptr;
    if (what == "gaussian") {
        if (!has_gauss) {
            std::fprintf(stderr, "error: --what gaussian requires --a\n");
            return 2;
        }
        if (joq_quat_gaussian(n, gauss_a, &q) != JOQ_OK) return api_error();
    } else {
        if (abc.size() != 3) {
            std::fprintf(stderr, "error: --what %s requires --abc a,b,c\n", what.c_str());
            return 2;
        }
        joq_status st = what == "qm" ? joq_quat_qm(n, abc[0], abc[1], abc[2], &q)
                                     : joq_quat_qk(n, abc[0], abc[1], abc[2], &q);
        if (st != JOQ_OK) return api_error();
    }

    int code;
    char* text = nullptr;
    if (what == "norm") {
        joq_rat* norm = nullptr;
        code = joq_quat_norm(q, &norm) == JOQ_OK && joq_rat_to_string(norm, &text) == JOQ_OK
                   ? 0
                   : 2;
        joq_rat_free(norm);
    } else {
        code = joq_quat_to_string(q, &text) == JOQ_OK ? 0 : 2;
    }
    joq_quat_free(q);
    if (code != 0) return api_error();
    print_owned(text, true);
    return 0;
}

int run_gf(const std::vector<long long>& abc, long long depth) {
    if (abc.size() != 3) {
        std::fprintf(stderr, "error: --abc requires three comma-separated integers\n");
        return 2;
    }
    char* out = nullptr;
    if (joq_gf_report(abc[0], abc[1], abc[2], depth, &out) != JOQ_OK) return api_error();
    print_owned(out, false);
    return 0;
}

/// "a,b,c;d,e,f" -> flat [a,b,c,d,e,f]; throws CLI::ValidationError on junk.
std::vector<long long> parse_triples(const std::vector<std::string>& groups) {
    std::vector<long long> flat;
    for (const std::string& group : groups) {
        std::size_t start = 0;
        int parts = 0;
        while (start <= group.size()) {
            std::size_t comma = group.find(',', start);
            std::string piece = group.substr(start, comma == std::string::npos
                                                        ? std::string::npos
                                                        : comma - start);
            std::size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(piece, &used);
            } catch (const std::exception&) {
                used = std::string::npos;
            }
            if (used != piece.size() || piece.empty())
                throw CLI::ValidationError("--triples", "bad integer in triple: " + group);
            flat.push_back(value);
            ++parts;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (parts != 3)
            throw CLI::ValidationError("--triples", "each triple needs three integers: " + group);
    }
    return flat;
}

int run_verify(const joq_verify_config& cfg) {
    char* report = nullptr;
    int any_fail = 0;
    if (joq_verify_run(&cfg, &report, &any_fail) != JOQ_OK) return api_error();
    print_owned(report, false);
    return any_fail ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact modified third-order Jacobsthal sequences and their quaternions"};
    app.require_subcommand(1);

    std::string format = "csv";
    long long from = 0, to = 0;

    auto* seq = app.add_subcommand("seq", "Table of one sequence over an index range");
    std::string seq_name;
    seq->add_option("name", seq_name, "Sequence name: K, M, X or J3")->required();
    seq->add_option("--from", from, "First index")->required();
    seq->add_option("--to", to, "Last index")->required();
    seq->add_option("--format", format, "Output format: csv or json");

    auto* table = app.add_subcommand("table", "All four sequences side by side");
    table->add_option("--from", from, "First index")->required();
    table->add_option("--to", to, "Last index")->required();
    table->add_option("--format", format, "Output format: csv or json");

    auto* quat = app.add_subcommand("quat", "One quaternion value or its norm");
    long long n = 0;
    std::vector<long long> abc;
    long long gauss_a = 0;
    std::string what;
    quat->add_option("--n", n, "Index")->required();
    quat->add_option("--abc", abc, "Offsets a,b,c")->delimiter(',')->expected(3);
    auto* gauss_opt = quat->add_option("--a", gauss_a, "Single offset for --what gaussian");
    quat->add_option("--what", what, "qk, qm, norm or gaussian")
        ->required()
        ->check(CLI::IsMember({"qk", "qm", "norm", "gaussian"}));

    auto* gf = app.add_subcommand("gf", "Generating-function numerator and series check");
    std::vector<long long> gf_abc;
    long long depth = 16;
    gf->add_option("--abc", gf_abc, "Offsets a,b,c")->delimiter(',')->expected(3)->required();
    gf->add_option("--depth", depth, "Series truncation depth, at least 3");

    auto* verify = app.add_subcommand("verify", "Run the identity checks and print a JSON report");
    joq_verify_config cfg;
    joq_verify_config_init(&cfg);
    std::vector<std::string> triple_groups;
    std::vector<std::string> check_names;
    bool inject = false;
    verify->add_option("--n-min", cfg.n_min, "Smallest index");
    verify->add_option("--n-max", cfg.n_max, "Largest index");
    verify->add_option("--series-depth", cfg.series_depth, "Generating-function depth");
    verify->add_option("--seed", cfg.seed, "Grid sampling seed");
    verify->add_option("--triples", triple_groups, "Offset triples as a,b,c;d,e,f")
        ->delimiter(';');
    verify->add_option("--checks", check_names, "Subset of checks to run")->delimiter(',');
    verify->add_flag("--inject-failure", inject, "Negative control: force one series failure");

    CLI11_PARSE(app, argc, argv);

    if (*seq) return run_seq(seq_name, from, to, format);
    if (*table) return run_table(from, to, format);
    if (*quat) return run_quat(n, abc, gauss_opt->count() > 0, gauss_a, what);
    if (*gf) return run_gf(gf_abc, depth);

    std::vector<long long> flat;
    try {
        flat = parse_triples(triple_groups);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }
    cfg.triples = flat.empty() ? nullptr : reinterpret_cast<const long long(*)[3]>(flat.data());
    cfg.triple_count = flat.size() / 3;
    std::vector<const char*> check_ptrs;
    for (const std::string& name : check_names) check_ptrs.push_back(name.c_str());
    cfg.checks = check_ptrs.empty() ? nullptr : check_ptrs.data();
    cfg.check_count = check_ptrs.size();
    cfg.inject_failure = inject ? 1 : 0;
    return run_verify(cfg);
}
