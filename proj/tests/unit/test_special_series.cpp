#include "facpoly/errors.hpp"
#include "facpoly/factorial.hpp"
#include "facpoly/frobenius.hpp"
#include "facpoly/special_series.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace facpoly {
namespace {

std::vector<long> range(long lo, long hi) {
    std::vector<long> v;
    for (long m = lo; m <= hi; ++m) v.push_back(m);
    return v;
}

TEST(ExpSeries, ClosedFormAtIntegers) {
    EXPECT_EQ(eval_at_integer(exp_series(Rational(1), 3), 3), Rational(8));
    const auto unit = exp_series(Rational(0), 6);
    for (unsigned long m = 0; m <= 6; ++m) EXPECT_EQ(eval_at_integer(unit, m), 1);
    const auto minus_one = exp_series(Rational(-1), 8);
    for (unsigned long m = 1; m <= 8; ++m) EXPECT_EQ(eval_at_integer(minus_one, m), 0);
    EXPECT_EQ(eval_at_integer(minus_one, 0), 1);
}

TEST(ExpSeries, Eigenrelation) {
    testing::Generator gen(89);
    for (int i = 0; i < 20; ++i) {
        const Rational lambda = gen.rational(20, 9);
        EXPECT_EQ(apply_P(exp_series(lambda, 30)), exp_series(lambda, 29) * lambda);
    }
}

TEST(ExpSeries, ComplexLambdaMatchesBinomialPower) {
    const GaussianRational lambda{Rational(1, 3), Rational(-2, 5)};
    for (unsigned long m = 0; m <= 10; ++m) EXPECT_EQ(umbral_exp_at(lambda, m), pow(GaussianRational{1 + lambda.re, lambda.im}, m));
}

TEST(TrigSeries, NamedValues) {
    const auto c = trig_series(TrigKind::cosine, 10);
    const auto s = trig_series(TrigKind::sine, 10);
    EXPECT_EQ(eval_at_integer(c, 4), Rational(-4));
    EXPECT_EQ(eval_at_integer(s, 0), 0);
    const Rational c6 = eval_at_integer(c, 6);
    const Rational s6 = eval_at_integer(s, 6);
    EXPECT_EQ(c6 * c6 + s6 * s6, 64);
}

TEST(TrigSeries, MatchOnePlusIPowers) {
    const auto c = trig_series(TrigKind::cosine, 21);
    const auto s = trig_series(TrigKind::sine, 21);
    for (unsigned long m = 0; m <= 21; ++m) {
        const auto z = pow(GaussianRational{1, 1}, m);
        EXPECT_EQ(eval_at_integer(c, m), z.re);
        EXPECT_EQ(eval_at_integer(s, m), z.im);
        // e(m, i) summed independently
        EXPECT_EQ(umbral_exp_at({0, 1}, m), z);
    }
}

TEST(TrigSeries, DifferenceRelations) {
    const auto c = trig_series(TrigKind::cosine, 21);
    const auto s = trig_series(TrigKind::sine, 21);
    for (unsigned long m = 0; m <= 20; ++m) {
        EXPECT_EQ(eval_at_integer(c, m + 1) - eval_at_integer(c, m), -eval_at_integer(s, m));
        EXPECT_EQ(eval_at_integer(s, m + 1) - eval_at_integer(s, m), eval_at_integer(c, m));
    }
}

TEST(BesselSeries, Coefficients) {
    const auto b0 = bessel_series(0, 6);
    EXPECT_EQ(b0.coeff(0), 1);
    // (-1)^1 / (1! 1! 2^2)
    EXPECT_EQ(b0.coeff(2), Rational(-1, 4));
    EXPECT_EQ(b0.coeff(1), 0);
    EXPECT_EQ(b0.coeff(4), Rational(1, 64));
    EXPECT_EQ(eval_at_integer(b0, 0), 1);
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(eval_at_integer(bessel_series(n, 8), 0), 0);
    EXPECT_EQ(eval_at_integer(bessel_series(1, 4), 2), 1);
    EXPECT_THROW(bessel_series(3, 2), ValidationError);
    EXPECT_EQ(bessel_series(-1, 7), bessel_series(1, 7) * Rational(-1));
}

TEST(BesselSeries, OperatorRecurrencesOnCoefficients) {
    const unsigned order = 20;
    for (int n = 1; n <= 5; ++n) {
        const auto lo = bessel_series(n - 1, order);
        const auto mid = bessel_series(n, order);
        const auto hi = bessel_series(n + 1, order);
        const long common = static_cast<long>(order) - 2;
        EXPECT_EQ((apply_P(mid) * Rational(2)).truncate(common), (lo - hi).truncate(common));
        EXPECT_EQ((mid * Rational(2 * n)).truncate(common), apply_M(lo + hi).truncate(common));
    }
}

TEST(BesselSeries, DifferenceRecurrences) {
    for (int n : {1, 3}) {
        const auto report = verify_bessel_recurrences(n, range(1, 10));
        EXPECT_EQ(report.shift_residual, 0);
        EXPECT_EQ(report.ladder_residual, 0);
    }
    const long zero[] = {0};
    EXPECT_EQ(verify_bessel_recurrences(2, zero).ladder_residual, 0);
    EXPECT_EQ(verify_bessel_recurrences(0, range(0, 15)).shift_residual, 0);
    const long negative[] = {-1};
    EXPECT_THROW(verify_bessel_recurrences(1, negative), ValidationError);
}

TEST(BesselSeries, SecondOrderDifferenceEquation) {
    const auto r0 = verify_bessel_difference_equation(0, range(2, 12));
    EXPECT_EQ(r0.max_residual, 0);
    EXPECT_TRUE(r0.structure_matches);
    const long two[] = {2};
    EXPECT_EQ(verify_bessel_difference_equation(1, two).max_residual, 0);
    const long one[] = {1};
    EXPECT_THROW(verify_bessel_difference_equation(1, one), ValidationError);
}

TEST(BesselSeries, OperatorAnnihilatesBeta) {
    for (int n = 0; n <= 4; ++n) {
        const auto b = bessel_series(n, 24);
        const auto image = apply_to_series(bessel_operator(n), b);
        for (long k = 0; k <= image.order(); ++k) EXPECT_EQ(image.coeff(static_cast<std::size_t>(k)), 0) << n << " " << k;
    }
}

TEST(BesselSeries, RemainderSkipsStructuralZeros) {
    // B_1 lives on odd indices; at an even order the indicator reports a_39 phi_39.
    const auto exact = bessel_series(1, 40);
    const auto r = eval_at_real(to_real(exact), 2.5, 40);
    const Rational term = exact.coeff(39) * falling_factorial(Rational(5, 2), 39);
    ASSERT_NE(term, 0);
    EXPECT_NEAR(r.remainder, std::fabs(term.get_d()), 1e-15 * std::fabs(term.get_d()));
}

TEST(BesselSeries, NonIntegerRemainderIsLastTerm) {
    const auto exact = bessel_series(0, 40);
    const auto b = to_real(exact);
    for (long order : {10L, 20L, 40L}) {
        const auto r = eval_at_real(b, 2.5, order);
        // last term with phi_order(5/2) computed exactly
        const Rational term = exact.coeff(static_cast<std::size_t>(order)) * falling_factorial(Rational(5, 2), order);
        EXPECT_NEAR(r.remainder, std::fabs(term.get_d()), 1e-15 * std::fabs(term.get_d()) + 1e-300);
    }
    const auto r30 = eval_at_real(b, 2.5, 30);
    const auto r40 = eval_at_real(b, 2.5, 40);
    EXPECT_NEAR(r30.value, r40.value, 50 * r30.remainder);
}

} // namespace
} // namespace facpoly
