#include <doctest.h>

#include "series_matrix.hpp"

using joq::BigInt;
using joq::IntMat3;
using joq::OffsetTriple;
using joq::QMat3;
using joq::Rational;
using joq::RQuat;

namespace {
const OffsetTriple consecutive{1, 2, 3};
const OffsetTriple samples[] = {consecutive, {0, 0, 0}, {1, 0, -1}, {-2, 3, 1}};
} // namespace

TEST_CASE("generating-function numerator coefficients") {
    joq::QPoly num = joq::gf_numerator(consecutive);
    CHECK(num.degree() == 2);
    CHECK(rationalize(num.coeff(0), "test") == joq::qk(0, consecutive));
    CHECK(rationalize(num.coeff(1), "test")
          == RQuat{Rational(-2), Rational(2), Rational(7), Rational(5)});
    CHECK(rationalize(num.coeff(1), "test") == joq::qk(1, consecutive) - joq::qk(0, consecutive));
    CHECK(rationalize(num.coeff(2), "test")
          == RQuat{Rational(-1), Rational(6), Rational(2), Rational(6)});
    CHECK(rationalize(num.coeff(2), "test") == scalar_mul(Rational(2), joq::qk(-1, consecutive)));
}

TEST_CASE("series times denominator telescopes to the numerator") {
    CHECK(joq::gf_series_check(consecutive, 16));
    CHECK(joq::gf_series_check({0, 0, 0}, 8));
    CHECK(joq::gf_series_check(consecutive, 3));
    for (const OffsetTriple& t : samples) CHECK(joq::gf_series_check(t, 12));
    CHECK_THROWS_AS(joq::gf_series_check(consecutive, 2), std::invalid_argument);
}

TEST_CASE("a perturbed series coefficient is detected") {
    joq::GfDiagnosis d = joq::gf_series_diagnose(consecutive, 16, 5);
    CHECK_FALSE(d.ok);
    CHECK(d.first_bad_degree == 5);
    CHECK(d.got != d.want);
    CHECK(d.want == RQuat{});

    // perturbing a low degree corrupts the numerator comparison instead
    joq::GfDiagnosis low = joq::gf_series_diagnose(consecutive, 16, 0);
    CHECK_FALSE(low.ok);
    CHECK(low.first_bad_degree == 0);
}

TEST_CASE("companion matrix powers") {
    IntMat3 a = joq::companion_matrix();
    CHECK(a == IntMat3{{{BigInt(1), BigInt(1), BigInt(2)},
                        {BigInt(1), BigInt(0), BigInt(0)},
                        {BigInt(0), BigInt(1), BigInt(0)}}});
    CHECK(joq::companion_power(1) == a);
    CHECK(joq::companion_power(0)
          == IntMat3{{{BigInt(1), BigInt(0), BigInt(0)},
                      {BigInt(0), BigInt(1), BigInt(0)},
                      {BigInt(0), BigInt(0), BigInt(1)}}});
    CHECK(joq::companion_power(2)
          == IntMat3{{{BigInt(2), BigInt(3), BigInt(2)},
                      {BigInt(1), BigInt(1), BigInt(2)},
                      {BigInt(1), BigInt(0), BigInt(0)}}});
    CHECK_THROWS_AS(joq::companion_power(-1), std::invalid_argument);
}

TEST_CASE("determinant doubles with each power") {
    CHECK(joq::mat_det(joq::companion_matrix()) == 2);
    for (long long n = 0; n <= 12; ++n)
        CHECK(joq::mat_det(joq::companion_power(n)) == BigInt(1) << static_cast<unsigned>(n));
}

TEST_CASE("jmatrix layout") {
    QMat3 j0 = joq::jmatrix(0, consecutive);
    CHECK(j0[0][0] == joq::qk(3, consecutive));
    CHECK(j0[0][0] == RQuat{Rational(10), Rational(15), Rational(31), Rational(66)});
    CHECK(j0[0][1] == joq::qk(4, consecutive) - joq::qk(3, consecutive));
    CHECK(j0[2][2] == scalar_mul(Rational(2), joq::qk(0, consecutive)));
    CHECK(joq::qmat_equal(joq::jmatrix(1, consecutive),
                          joq::qmat_mul_int(j0, joq::companion_matrix())));
}

TEST_CASE("matrix identity over QK entries") {
    for (const OffsetTriple& t : samples) {
        CHECK(joq::matrix_identity_check(0, t));
        CHECK(joq::matrix_identity_check(5, t));
        CHECK(joq::matrix_identity_check(12, t));
    }
}

TEST_CASE("QM-entry base matrix misses by 2^(3-r) Theta per row") {
    for (const OffsetTriple& t : samples) {
        QMat3 truth = joq::jmatrix(0, t);
        QMat3 claimed = joq::jmatrix_qm_base(t);
        CHECK_FALSE(joq::qmat_equal(claimed, truth));
        RQuat theta = joq::basis(t).theta;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                CHECK(truth[r][c] - claimed[r][c] == scalar_mul(Rational::pow2(3 - r), theta));
    }
}

TEST_CASE("matrix text rendering") {
    std::string text = joq::qmat_to_string(joq::jmatrix(0, consecutive));
    CHECK(text.substr(0, 2) == "[[");
    CHECK(text.find("10 + 15*I + 31*J + 66*K") != std::string::npos);
}
