#include "facpoly/errors.hpp"
#include "facpoly/factorial.hpp"
#include "facpoly/weyl_operator.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

#include <map>
#include <string>

namespace facpoly {
namespace {

// Brute-force normal ordering on words in 'M' and 'P': rewrite the first
// "PM" as "MP" + "" until no P precedes an M. Shares nothing with multiply().
using WordSum = std::map<std::string, Rational>;

WordSum to_words(const WeylOperator& op) {
    WordSum out;
    for (const auto& [mono, c] : op.terms()) out[std::string(mono.m_power, 'M') + std::string(mono.p_power, 'P')] += c;
    return out;
}

WeylOperator normal_order(WordSum words) {
    WeylOperator out;
    while (!words.empty()) {
        auto node = words.extract(words.begin());
        const std::string& w = node.key();
        const Rational& c = node.mapped();
        const auto pos = w.find("PM");
        if (pos == std::string::npos) {
            const auto m = static_cast<unsigned>(std::count(w.begin(), w.end(), 'M'));
            out += WeylOperator::term(m, static_cast<unsigned>(w.size()) - m, c);
            continue;
        }
        words[w.substr(0, pos) + "MP" + w.substr(pos + 2)] += c;
        words[w.substr(0, pos) + w.substr(pos + 2)] += c;
    }
    return out;
}

WeylOperator brute_product(const WeylOperator& a, const WeylOperator& b) {
    WordSum words;
    for (const auto& [wa, ca] : to_words(a))
        for (const auto& [wb, cb] : to_words(b)) words[wa + wb] += ca * cb;
    return normal_order(words);
}

const WeylOperator M = WeylOperator::M();
const WeylOperator P = WeylOperator::P();
const WeylOperator I = WeylOperator::identity();

TEST(WeylOperator, CanonicalStorage) {
    WeylOperator op = M + P - M;
    EXPECT_EQ(op, P);
    EXPECT_EQ(op.terms().size(), 1u);
    EXPECT_TRUE((P - P).is_zero());
    EXPECT_EQ(WeylOperator::term(2, 1, 0), WeylOperator{});
}

TEST(WeylOperator, MultiplyNamedExamples) {
    EXPECT_EQ(P * M, M * P + I);
    const WeylOperator A = WeylOperator::term(2, 3, Rational(5, 7)) + M;
    EXPECT_EQ(A * I, A);
    EXPECT_EQ(I * A, A);
    EXPECT_EQ(P.pow(2) * M.pow(2), WeylOperator::term(2, 2) + WeylOperator::term(1, 1, 4) + WeylOperator::constant(2));
}

TEST(WeylOperator, MultiplyMatchesBruteForceRewriting) {
    testing::Generator gen(41);
    for (int i = 0; i < 150; ++i) {
        const auto a = gen.weyl(4);
        const auto b = gen.weyl(4);
        EXPECT_EQ(multiply(a, b), brute_product(a, b)) << a.to_string() << " * " << b.to_string();
    }
}

TEST(WeylOperator, Commutator) {
    EXPECT_EQ(commutator(P, M), I);
    const WeylOperator A = WeylOperator::term(3, 1, 2) + P;
    EXPECT_TRUE(commutator(A, A).is_zero());
    EXPECT_EQ(commutator(M * P, M), M);
    // [MP, P] = -P completes the ladder pair.
    EXPECT_EQ(commutator(M * P, P), -P);
}

TEST(WeylOperator, Associativity) {
    testing::Generator gen(43);
    for (int i = 0; i < 60; ++i) {
        const auto a = gen.weyl(3), b = gen.weyl(3), c = gen.weyl(3);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(WeylOperator, ApplyToSeries) {
    EXPECT_EQ(apply_to_series(M.pow(3), FactorialSeries::unit()), FactorialSeries::basis(3));
    EXPECT_EQ(apply_to_series(WeylOperator{}, FactorialSeries::basis(4)), FactorialSeries{});
    EXPECT_EQ(apply_to_series(M * P, FactorialSeries::basis(5)), FactorialSeries::basis(5) * Rational(5));
}

TEST(WeylOperator, ActionHomomorphism) {
    testing::Generator gen(47);
    for (int i = 0; i < 200; ++i) {
        const auto a = gen.weyl(4);
        const auto b = gen.weyl(4);
        const auto f = gen.truncated_series(12);
        const auto lhs = apply_to_series(multiply(a, b), f);
        const auto rhs = apply_to_series(a, apply_to_series(b, f));
        const long common = std::min(lhs.order(), rhs.order());
        ASSERT_GE(common, 0);
        EXPECT_EQ(lhs.truncate(common), rhs.truncate(common));
    }
}

TEST(WeylOperator, ActsPointwiseAsShiftOperators) {
    // (M f)(x) = x f(x - 1), (P f)(x) = f(x + 1) - f(x), X f = x f.
    testing::Generator gen(53);
    const auto f = gen.complete_series(8);
    auto value = [&f](long x) { return eval_at_integer(f, static_cast<unsigned long>(x)); };
    for (long m = 1; m <= 10; ++m) {
        EXPECT_EQ(eval_at_integer(apply_to_series(M, f), m), Rational(m) * value(m - 1));
        EXPECT_EQ(eval_at_integer(apply_to_series(P, f), m), value(m + 1) - value(m));
        EXPECT_EQ(eval_at_integer(apply_to_series(WeylOperator::X(), f), m), Rational(m) * value(m));
        EXPECT_EQ(eval_at_integer(apply_to_series(WeylOperator::shift(), f), m), value(m + 1));
    }
}

TEST(WeylOperator, SubstitutePolynomial) {
    // (x^2)(X) applied to 1 gives x^2 = phi_2 + phi_1
    const WeylOperator x2 = substitute(Polynomial::monomial(2), WeylOperator::X());
    EXPECT_EQ(apply_to_series(x2, FactorialSeries::unit()), FactorialSeries::complete({0, 1, 1}));
    EXPECT_EQ(x2, WeylOperator::X() * WeylOperator::X());
}

TEST(WeylOperator, Formatting) {
    const WeylOperator op = WeylOperator::term(1, 2, 4) + WeylOperator::term(0, 1, 2) + WeylOperator::constant(3);
    EXPECT_EQ(op.to_string(), "4 M P^2 + 2 P + 3");
    EXPECT_EQ((-M).to_string(), "-M");
    EXPECT_EQ(WeylOperator{}.to_string(), "0");
}

} // namespace
} // namespace facpoly
