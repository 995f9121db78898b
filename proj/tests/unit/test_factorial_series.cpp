#include "facpoly/errors.hpp"
#include "facpoly/factorial.hpp"
#include "facpoly/factorial_series.hpp"
#include "facpoly/special_series.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace facpoly {
namespace {

// Direct pointwise value sum_n a_n phi_n(m), with no reliance on finite support.
Rational pointwise(const FactorialSeries& f, long m) {
    Rational sum;
    for (std::size_t n = 0; n < f.coeffs().size(); ++n)
        sum += f.coeffs()[n] * falling_factorial(Rational(m), static_cast<unsigned>(n));
    return sum;
}

TEST(FactorialSeries, ApplyMRaisesIndex) {
    EXPECT_EQ(apply_M(FactorialSeries::basis(2)), FactorialSeries::basis(3));
    EXPECT_EQ(apply_M(FactorialSeries{}), FactorialSeries{});
    const auto f = FactorialSeries::complete({1, 2});
    const auto g = apply_M(f);
    EXPECT_EQ(g.coeffs(), (std::vector<Rational>{0, 1, 2}));
    // x f(x - 1) at x = 4
    EXPECT_EQ(eval_at_integer(g, 4), Rational(28));
    EXPECT_EQ(Rational(4) * eval_at_integer(f, 3), Rational(28));
}

TEST(FactorialSeries, ApplyPLowersIndexAndOrder) {
    EXPECT_EQ(apply_P(FactorialSeries::basis(3)), FactorialSeries::basis(2) * Rational(3));
    EXPECT_EQ(apply_P(FactorialSeries::complete({5})), FactorialSeries{});
    const Rational lambda(2, 3);
    const auto e = exp_series(lambda, 10);
    const auto pe = apply_P(e);
    EXPECT_EQ(pe.order(), 9);
    EXPECT_FALSE(pe.is_complete());
    EXPECT_EQ(pe, exp_series(lambda, 9) * lambda);
}

TEST(FactorialSeries, ApplyXIsMultiplicationByX) {
    EXPECT_EQ(apply_x(FactorialSeries::unit()), FactorialSeries::basis(1));
    const auto g = apply_x(FactorialSeries::basis(3));
    EXPECT_EQ(g, FactorialSeries::basis(4) + FactorialSeries::basis(3) * Rational(3));
    EXPECT_EQ(eval_at_integer(g, 7), Rational(7 * 210));
    EXPECT_EQ(Rational(840 + 630), Rational(7 * 210));

    testing::Generator gen(17);
    for (int i = 0; i < 30; ++i) {
        const auto f = gen.truncated_series(10);
        EXPECT_EQ(apply_x(f), apply_M(f + apply_P(f)).truncate(10));
        const auto c = gen.complete_series(8);
        for (long m = 0; m <= 12; ++m) EXPECT_EQ(eval_at_integer(apply_x(c), m), Rational(m) * pointwise(c, m));
    }
}

TEST(FactorialSeries, ShiftIsIdentityPlusP) {
    EXPECT_EQ(apply_shift(FactorialSeries::complete({4})), FactorialSeries::complete({4}));
    EXPECT_EQ(apply_shift(FactorialSeries::basis(1)), FactorialSeries::complete({1, 1}));
    testing::Generator gen(19);
    for (int i = 0; i < 30; ++i) {
        const auto f = gen.truncated_series(9);
        EXPECT_EQ(apply_shift(f), f.truncate(8) + apply_P(f));
        const auto c = gen.complete_series(9);
        for (long m = 0; m <= 10; ++m) EXPECT_EQ(eval_at_integer(apply_shift(c), m), pointwise(c, m + 1));
    }
    // e(x + 1, lambda) = (1 + lambda) e(x, lambda)
    const Rational lambda(-1, 3);
    EXPECT_EQ(apply_shift(exp_series(lambda, 12)), exp_series(lambda, 11) * Rational(1 + lambda));
}

TEST(FactorialSeries, EvalAtIntegerUsesOnlyPrefix) {
    const auto e = exp_series(Rational(1), 5);
    EXPECT_EQ(eval_at_integer(e, 3), Rational(8));
    EXPECT_EQ(eval_at_integer(FactorialSeries::truncated({-2, 5, 7}), 0), Rational(-2));
    const auto c = trig_series(TrigKind::cosine, 6);
    EXPECT_EQ(eval_at_integer(c, 4), Rational(-4));
    EXPECT_THROW(eval_at_integer(e, 6), OrderError);
    // Complete series evaluate anywhere.
    EXPECT_EQ(eval_at_integer(FactorialSeries::basis(2), 100), Rational(9900));
}

TEST(FactorialSeries, EvalIndependentOfCoefficientsPastPoint) {
    testing::Generator gen(23);
    for (int i = 0; i < 20; ++i) {
        const auto f = gen.truncated_series(10);
        for (long m = 0; m <= 10; ++m) {
            std::vector<Rational> changed = f.coeffs();
            for (std::size_t n = static_cast<std::size_t>(m) + 1; n < changed.size(); ++n) changed[n] += 1;
            EXPECT_EQ(eval_at_integer(f, m), eval_at_integer(FactorialSeries::truncated(changed), m));
        }
    }
}

TEST(FactorialSeries, EvalAtReal) {
    const auto e = exp_series(0.5, 60);
    const auto at2 = eval_at_real(e, 2.0, 40);
    EXPECT_NEAR(at2.value, 2.25, 1e-14);
    EXPECT_LT(at2.remainder, 1e-12);
    const auto at25 = eval_at_real(e, 2.5, 60);
    EXPECT_NEAR(at25.value, std::pow(1.5, 2.5), 1e-9);
    EXPECT_NEAR(at25.value, 2.7556759606, 1e-9);

    const auto zero = eval_at_real(RealFactorialSeries{}, 3.3, 5);
    EXPECT_EQ(zero.value, 0.0);
    EXPECT_EQ(zero.remainder, 0.0);
    EXPECT_THROW(eval_at_real(e, 1.0, 61), OrderError);
}

TEST(FactorialSeries, Commutator) {
    testing::Generator gen(29);
    for (int i = 0; i < 40; ++i) {
        const int order = static_cast<int>(gen.integer(1, 14));
        const auto f = gen.truncated_series(order);
        const auto lhs = apply_P(apply_M(f)) - apply_M(apply_P(f));
        EXPECT_EQ(lhs, f) << "order " << order;
    }
}

TEST(FactorialSeries, NumberOperatorOnBasis) {
    for (unsigned n = 0; n <= 20; ++n)
        EXPECT_EQ(apply_M(apply_P(FactorialSeries::basis(n))), FactorialSeries::basis(n) * Rational(n));
}

TEST(FactorialSeries, PointwiseConsistency) {
    testing::Generator gen(31);
    for (int i = 0; i < 40; ++i) {
        const auto f = gen.complete_series(10);
        for (long m = 0; m <= 10; ++m) {
            EXPECT_EQ(eval_at_integer(apply_P(f), m), pointwise(f, m + 1) - pointwise(f, m));
            if (m >= 1) EXPECT_EQ(eval_at_integer(apply_M(f), m), Rational(m) * pointwise(f, m - 1));
        }
    }
}

TEST(FactorialSeries, PhiSatisfiesFirstOrderDifferenceEquation) {
    // x [phi_n(x) - phi_n(x - 1)] = n phi_n(x)
    for (unsigned n = 0; n <= 8; ++n)
        for (long x = 1; x <= 12; ++x) {
            const Rational lhs = Rational(x) * (falling_factorial(Rational(x), n) - falling_factorial(Rational(x - 1), n));
            EXPECT_EQ(lhs, Rational(n) * falling_factorial(Rational(x), n));
        }
}

TEST(FactorialSeries, MixedExtentArithmetic) {
    const auto complete = FactorialSeries::complete({1, 2, 3, 4, 5});
    const auto truncated = FactorialSeries::truncated({1, 1, 1});
    const auto sum = complete + truncated;
    EXPECT_FALSE(sum.is_complete());
    EXPECT_EQ(sum.coeffs(), (std::vector<Rational>{2, 3, 4}));
    EXPECT_THROW(truncated.coeff(3), OrderError);
    EXPECT_EQ(complete.coeff(9), 0);
}

} // namespace
} // namespace facpoly
