#include "sequences.hpp"

#include "cyclo.hpp"

#include <json.hpp>

namespace joq {

namespace {

int mod3(long long n) { return static_cast<int>(((n % 3) + 3) % 3); }

void require_range(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("empty index range: lo exceeds hi");
}

const char* const seq_names[] = {"K", "M", "X", "J3"};

} // namespace

Rational m_val(long long n) {
    return mod3(n) == 0 ? Rational(2) : Rational(-1);
}

Rational x_val(long long n) {
    switch (mod3(n)) {
        case 0: return Rational(0);
        case 1: return Rational(1);
        default: return Rational(-1);
    }
}

Rational k_val(long long n) {
    return Rational::pow2(n) + m_val(n);
}

Rational j3_val(long long n) {
    static const long long d[3] = {-2, 3, -1};
    return (Rational::pow2(n + 1) + Rational(d[mod3(n)])) / Rational(7);
}

ProgressionCoeffs progression_coeffs(long long a) {
    if (a < 1) throw std::invalid_argument("progression stride must be positive");
    Cyclo wa = Cyclo::omega_pow(a);
    Rational ma = (wa + wa.conj()).rational_part(); // trace of w^a is M(a)
    Rational p2 = Rational::pow2(a);
    return {p2 + ma, -(p2 * ma + Rational(1)), p2};
}

Rational seq_value(const std::string& name, long long n) {
    if (name == "K") return k_val(n);
    if (name == "M") return m_val(n);
    if (name == "X") return x_val(n);
    if (name == "J3") return j3_val(n);
    throw std::invalid_argument("unknown sequence: " + name);
}

SeqTable make_seq_table(const std::string& name, long long lo, long long hi) {
    require_range(lo, hi);
    SeqTable t{name, lo, hi, {}};
    t.values.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long long n = lo; n <= hi; ++n) t.values.push_back(seq_value(name, n));
    return t;
}

std::string render_csv(const SeqTable& table) {
    std::string out = "n,value\n";
    for (std::size_t idx = 0; idx < table.values.size(); ++idx) {
        out += std::to_string(table.lo + static_cast<long long>(idx));
        out += ",";
        out += table.values[idx].to_string();
        out += "\n";
    }
    return out;
}

std::string render_json(const SeqTable& table) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t idx = 0; idx < table.values.size(); ++idx) {
        rows.push_back({{"n", std::to_string(table.lo + static_cast<long long>(idx))},
                        {"value", table.values[idx].to_string()}});
    }
    return rows.dump(2) + "\n";
}

std::string multi_table_csv(long long lo, long long hi) {
    require_range(lo, hi);
    std::string out = "n,K,M,X,J3\n";
    for (long long n = lo; n <= hi; ++n) {
        out += std::to_string(n);
        for (const char* name : seq_names) {
            out += ",";
            out += seq_value(name, n).to_string();
        }
        out += "\n";
    }
    return out;
}

std::string multi_table_json(long long lo, long long hi) {
    require_range(lo, hi);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (long long n = lo; n <= hi; ++n) {
        nlohmann::ordered_json row{{"n", std::to_string(n)}};
        for (const char* name : seq_names) row[name] = seq_value(name, n).to_string();
        rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
}

} // namespace joq
