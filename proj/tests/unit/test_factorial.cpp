#include "facpoly/errors.hpp"
#include "facpoly/factorial.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <thread>

namespace facpoly {
namespace {

// S(n, k) = (1/k!) sum_j (-1)^j C(k, j) (k - j)^n, independent of the table recurrence.
Rational stirling_second_explicit(unsigned n, unsigned k) {
    Rational sum;
    for (unsigned j = 0; j <= k; ++j) {
        Rational term = binomial(k, j) * pow(Rational(k - j), n);
        sum += j % 2 == 0 ? term : Rational(-term);
    }
    return sum / factorial(k);
}

TEST(FallingFactorial, ProductForm) {
    EXPECT_EQ(falling_factorial(Rational(5), 3), Rational(60));
    EXPECT_EQ(falling_factorial(Rational(3), 4), Rational(0));
    EXPECT_EQ(falling_factorial(Rational(-2, 3), 0), Rational(1));
    EXPECT_EQ(falling_factorial(Rational(1, 2), 2), Rational(-1, 4));
    EXPECT_DOUBLE_EQ(falling_factorial(2.5, 2), 3.75);
}

TEST(FallingFactorial, StepRecurrenceOnRandomRationals) {
    testing::Generator gen(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational x = gen.rational(50, 7);
        for (unsigned n = 0; n <= 30; ++n)
            EXPECT_EQ(falling_factorial(x, n + 1), (x - n) * falling_factorial(x, n));
    }
}

TEST(FallingFactorial, VanishesBelowIndex) {
    for (unsigned n = 1; n <= 20; ++n)
        for (unsigned m = 0; m < n; ++m) EXPECT_EQ(falling_factorial(Rational(m), n), 0) << m << " " << n;
}

TEST(FallingFactorialReal, IntegerIndexAgreesWithProduct) {
    for (unsigned n = 0; n <= 10; ++n) {
        for (double x = -10.0; x <= 10.0; x += 0.37) {
            const double exact = falling_factorial(x, n);
            const double viaGamma = falling_factorial_real(x, n);
            EXPECT_NEAR(viaGamma, exact, 1e-12 * std::max(1.0, std::fabs(exact))) << x << " " << n;
        }
    }
}

TEST(FallingFactorialReal, NamedValues) {
    EXPECT_NEAR(falling_factorial_real(3, 2), 6.0, 1e-13);
    // Gamma(1) / Gamma(1/2)
    EXPECT_NEAR(falling_factorial_real(0, 0.5), 1.0 / std::sqrt(std::numbers::pi), 1e-13);
    EXPECT_NEAR(falling_factorial_real(-1.5, 2), 3.75, 1e-12);
    // Denominator pole only: phi_4(3) = 0.
    EXPECT_EQ(falling_factorial_real(3, 4), 0.0);
    // Coincident poles take the product-form limit.
    EXPECT_NEAR(falling_factorial_real(-2, 1), -2.0, 1e-13);
    EXPECT_NEAR(falling_factorial_real(-3, 3), falling_factorial(-3.0, 3), 1e-11);
}

TEST(FallingFactorialReal, NumeratorPoleThrows) {
    try {
        falling_factorial_real(-1, 0.5);
        FAIL() << "expected PoleError";
    } catch (const PoleError& e) {
        EXPECT_NE(std::string(e.what()).find("numerator"), std::string::npos);
    }
}

TEST(Stirling, TablesMatchExplicitFormula) {
    const auto& t = stirling_table();
    EXPECT_EQ(t.bound(), StirlingTable::default_bound);
    for (unsigned n = 0; n <= 15; ++n)
        for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(Rational(t.second(n, k)), stirling_second_explicit(n, k));
}

TEST(Stirling, FirstKindMatchesExpandedProduct) {
    for (unsigned n = 0; n <= 12; ++n) {
        Polynomial product = Polynomial::constant(1);
        for (unsigned k = 0; k < n; ++k) product *= Polynomial({Rational(-static_cast<long>(k)), Rational(1)});
        EXPECT_EQ(falling_factorial_polynomial(n), product);
    }
}

TEST(Stirling, ConcurrentReadsOfSharedTable) {
    std::vector<std::thread> threads;
    std::vector<Integer> seen(8);
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&seen, i] { seen[static_cast<std::size_t>(i)] = stirling_table().second(20, 7); });
    for (auto& th : threads) th.join();
    for (const auto& v : seen) EXPECT_EQ(v, seen.front());
}

TEST(BasisConversion, NamedExamples) {
    EXPECT_EQ(monomial_to_factorial(Polynomial::monomial(2)), (std::vector<Rational>{0, 1, 1}));
    EXPECT_EQ(monomial_to_factorial(Polynomial::constant(7)), (std::vector<Rational>{7}));
    EXPECT_EQ(monomial_to_factorial(Polynomial::monomial(3)), (std::vector<Rational>{0, 1, 3, 1}));
    EXPECT_EQ(factorial_to_monomial({0, 0, 1}), Polynomial({0, -1, 1}));
    EXPECT_EQ(factorial_to_monomial({5}), Polynomial::constant(5));
    EXPECT_TRUE(monomial_to_factorial(Polynomial{}).empty());
}

TEST(BasisConversion, RoundTripAndPointwiseAgreement) {
    testing::Generator gen(5);
    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial p = gen.polynomial(12);
        const auto b = monomial_to_factorial(p);
        EXPECT_EQ(factorial_to_monomial(b), p);
        for (long m = -3; m <= 15; ++m) {
            Rational sum;
            for (std::size_t k = 0; k < b.size(); ++k) sum += b[k] * falling_factorial(Rational(m), static_cast<unsigned>(k));
            EXPECT_EQ(sum, p(Rational(m)));
        }
    }
}

TEST(BasisConversion, BeyondCachedBound) {
    const Polynomial p = Polynomial::monomial(70) + Polynomial::monomial(3);
    EXPECT_EQ(factorial_to_monomial(monomial_to_factorial(p)), p);
}

} // namespace
} // namespace facpoly
