#include <doctest.h>

#include "cyclo.hpp"
#include "sequences.hpp"

using joq::Cyclo;
using joq::Rational;

namespace {

// Oracles below march the defining recurrences term by term from the seeds.
// They share no code with the closed forms under test.

Rational k_oracle(long long n) {
    Rational w0(3), w1(1), w2(3); // K(i), K(i+1), K(i+2) at i = 0
    for (long long i = 0; i < n; ++i) {
        Rational next = w2 + w1 + Rational(2) * w0;
        w0 = w1;
        w1 = w2;
        w2 = next;
    }
    for (long long i = 0; i > n; --i) {
        Rational prev = (w2 - w1 - w0) / Rational(2);
        w2 = w1;
        w1 = w0;
        w0 = prev;
    }
    return w0;
}

Rational j3_oracle(long long n) {
    Rational w0(0), w1(1), w2(1);
    for (long long i = 0; i < n; ++i) {
        Rational next = w2 + w1 + Rational(2) * w0;
        w0 = w1;
        w1 = w2;
        w2 = next;
    }
    for (long long i = 0; i > n; --i) {
        Rational prev = (w2 - w1 - w0) / Rational(2);
        w2 = w1;
        w1 = w0;
        w0 = prev;
    }
    return w0;
}

// M(n+2) = -M(n+1) - M(n): both roots of x^2 + x + 1 satisfy it.
Rational m_oracle(long long n) {
    Rational w0(2), w1(-1);
    for (long long i = 0; i < n; ++i) {
        Rational next = -w1 - w0;
        w0 = w1;
        w1 = next;
    }
    for (long long i = 0; i > n; --i) {
        Rational prev = -w0 - w1;
        w1 = w0;
        w0 = prev;
    }
    return w0;
}

// X(n) = (w^n - conj(w)^n) / (w - conj(w)), evaluated in the cyclotomic ring.
Rational x_oracle(long long n) {
    Cyclo wn = Cyclo::omega_pow(n);
    Cyclo inverse_gap(Rational(joq::BigInt(-1), joq::BigInt(3)),
                      Rational(joq::BigInt(-2), joq::BigInt(3)));
    return ((wn - wn.conj()) * inverse_gap).rational_part();
}

} // namespace

TEST_CASE("k_val agrees with the recurrence oracle on [-20, 40]") {
    for (long long n = -20; n <= 40; ++n) CHECK(joq::k_val(n) == k_oracle(n));
}

TEST_CASE("j3_val agrees with the recurrence oracle on [-20, 40]") {
    for (long long n = -20; n <= 40; ++n) CHECK(joq::j3_val(n) == j3_oracle(n));
}

TEST_CASE("m_val agrees with the order-2 oracle and is even") {
    for (long long n = -30; n <= 30; ++n) {
        CHECK(joq::m_val(n) == m_oracle(n));
        CHECK(joq::m_val(-n) == joq::m_val(n));
    }
}

TEST_CASE("x_val agrees with the root-quotient oracle and is odd") {
    for (long long n = -30; n <= 30; ++n) {
        CHECK(joq::x_val(n) == x_oracle(n));
        CHECK(joq::x_val(-n) == -joq::x_val(n));
    }
}

TEST_CASE("pinned values") {
    const long long k_head[] = {3, 1, 3, 10, 15, 31, 66, 127, 255};
    for (int n = 0; n <= 8; ++n) CHECK(joq::k_val(n) == Rational(k_head[n]));
    CHECK(joq::k_val(-1) == Rational(joq::BigInt(-1), joq::BigInt(2)));
    CHECK(joq::k_val(-2) == Rational(joq::BigInt(-3), joq::BigInt(4)));
    CHECK(joq::k_val(-3) == Rational(joq::BigInt(17), joq::BigInt(8)));

    const long long j_head[] = {0, 1, 1, 2, 5, 9, 18, 37, 73};
    for (int n = 0; n <= 8; ++n) CHECK(joq::j3_val(n) == Rational(j_head[n]));
    CHECK(joq::j3_val(-1) == Rational(0));
    CHECK(joq::j3_val(-2) == Rational(joq::BigInt(1), joq::BigInt(2)));

    CHECK(joq::m_val(0) == Rational(2));
    CHECK(joq::m_val(1) == Rational(-1));
    CHECK(joq::m_val(300) == Rational(2));
    CHECK(joq::x_val(0) == Rational(0));
    CHECK(joq::x_val(1) == Rational(1));
    CHECK(joq::x_val(2) == Rational(-1));
}

TEST_CASE("K relates to J3 with weights 1, 2, 6") {
    for (long long n = 0; n <= 20; ++n)
        CHECK(joq::k_val(n)
              == joq::j3_val(n) + Rational(2) * joq::j3_val(n - 1) + Rational(6) * joq::j3_val(n - 2));
}

TEST_CASE("progression coefficients") {
    auto c1 = joq::progression_coeffs(1);
    CHECK(c1.c2 == Rational(1));
    CHECK(c1.c1 == Rational(1));
    CHECK(c1.c0 == Rational(2));

    auto c2 = joq::progression_coeffs(2);
    CHECK(c2.c2 == Rational(3));
    CHECK(c2.c1 == Rational(3));
    CHECK(c2.c0 == Rational(4));

    auto c3 = joq::progression_coeffs(3);
    CHECK(c3.c2 == Rational(10));
    CHECK(c3.c1 == Rational(-17));
    CHECK(c3.c0 == Rational(8));

    CHECK_THROWS_AS(joq::progression_coeffs(0), std::invalid_argument);
    CHECK_THROWS_AS(joq::progression_coeffs(-2), std::invalid_argument);
}

TEST_CASE("every-a-th-term recurrence holds on the J3 oracle") {
    // spot check with a = 2: J(6) = 3 J(4) + 3 J(2) + 4 J(0)
    CHECK(j3_oracle(6) == Rational(18));
    for (long long a = 1; a <= 5; ++a) {
        auto pc = joq::progression_coeffs(a);
        for (long long r = 0; r < a; ++r)
            for (long long n = 0; n <= 6; ++n)
                CHECK(j3_oracle(a * (n + 3) + r)
                      == pc.c2 * j3_oracle(a * (n + 2) + r) + pc.c1 * j3_oracle(a * (n + 1) + r)
                             + pc.c0 * j3_oracle(a * n + r));
    }
}

TEST_CASE("seq_value dispatches by name") {
    CHECK(joq::seq_value("K", 4) == Rational(15));
    CHECK(joq::seq_value("M", 3) == Rational(2));
    CHECK(joq::seq_value("X", 5) == Rational(-1));
    CHECK(joq::seq_value("J3", 4) == Rational(5));
    CHECK_THROWS_AS(joq::seq_value("k", 0), std::invalid_argument);
    CHECK_THROWS_AS(joq::seq_value("Q", 0), std::invalid_argument);
}

TEST_CASE("table rendering") {
    joq::SeqTable t = joq::make_seq_table("K", -2, 2);
    CHECK(joq::render_csv(t) == "n,value\n-2,-3/4\n-1,-1/2\n0,3\n1,1\n2,3\n");

    joq::SeqTable m = joq::make_seq_table("M", 0, 1);
    CHECK(joq::render_json(m) == R"([
  {
    "n": "0",
    "value": "2"
  },
  {
    "n": "1",
    "value": "-1"
  }
])"
                                     "\n");

    CHECK(joq::multi_table_csv(0, 1) == "n,K,M,X,J3\n0,3,2,0,0\n1,1,-1,1,1\n");
    CHECK_THROWS_AS(joq::make_seq_table("K", 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(joq::multi_table_csv(5, 4), std::invalid_argument);
}
