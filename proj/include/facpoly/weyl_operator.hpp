#pragma once

#include "facpoly/factorial_series.hpp"
#include "facpoly/polynomial.hpp"
#include "facpoly/rational.hpp"

#include <compare>
#include <type_traits>
#include <map>
#include <string>

namespace facpoly {

// Exponent pair of a normal-ordered word M^m_power P^p_power.
struct WeylMonomial {
    unsigned m_power = 0;
    unsigned p_power = 0;

    friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
};

/// Element of the Weyl algebra generated by M and P with [P, M] = 1.
///
/// Stored in normal order: every term c M^i P^j has all M factors to the left
/// of all P factors. Zero coefficients are never stored.
class WeylOperator {
public:
    using Terms = std::map<WeylMonomial, Rational>;

    WeylOperator() = default;
    explicit WeylOperator(Terms terms);

    static WeylOperator identity() { return constant(1); }
    static WeylOperator constant(const Rational& c);
    static WeylOperator term(unsigned m_power, unsigned p_power, const Rational& c = 1);
    static WeylOperator M() { return term(1, 0); }
    static WeylOperator P() { return term(0, 1); }
    // Multiplication by x, i.e. M (1 + P).
    static WeylOperator X();
    // Unit shift e^{d/dx}, i.e. 1 + P.
    static WeylOperator shift() { return term(0, 0) + P(); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(unsigned m_power, unsigned p_power) const;

    WeylOperator pow(unsigned exponent) const;

    WeylOperator& operator+=(const WeylOperator& rhs);
    WeylOperator& operator-=(const WeylOperator& rhs);
    WeylOperator& operator*=(const Rational& c);

    friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
    friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
    friend WeylOperator operator-(WeylOperator a) { return a *= Rational(-1); }
    friend WeylOperator operator*(WeylOperator a, const Rational& c) { return a *= c; }
    friend WeylOperator operator*(const Rational& c, WeylOperator a) { return a *= c; }
    friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
    friend bool operator==(const WeylOperator&, const WeylOperator&) = default;

    // e.g. "4 M P^2 + 2 P + 3"
    std::string to_string() const;

private:
    void add_term(const WeylMonomial& mono, const Rational& c);

    Terms terms_;
};

// Normal-ordered product.
WeylOperator multiply(const WeylOperator& a, const WeylOperator& b);

// a b - b a
WeylOperator commutator(const WeylOperator& a, const WeylOperator& b);

// p(arg) with the operator substituted for the variable, evaluated by Horner's rule.
WeylOperator substitute(const Polynomial& p, const WeylOperator& arg);

/// Acts term by term: each c M^i P^j applies P j times, then M i times.
template <typename T>
BasicFactorialSeries<T> apply_to_series(const WeylOperator& op, const BasicFactorialSeries<T>& f) {
    BasicFactorialSeries<T> result;
    bool first = true;
    for (const auto& [mono, c] : op.terms()) {
        BasicFactorialSeries<T> g = f;
        for (unsigned j = 0; j < mono.p_power; ++j) g = apply_P(g);
        for (unsigned i = 0; i < mono.m_power; ++i) g = apply_M(g);
        if constexpr (std::is_same_v<T, Rational>)
            g *= c;
        else
            g *= to_real(c);
        result = first ? g : result + g;
        first = false;
    }
    if (first) {
        // Zero operator: the image is the zero function, known wherever f is.
        if (f.is_complete()) return {};
        return BasicFactorialSeries<T>(std::vector<T>(f.coeffs().size(), T(0)), Extent::truncated);
    }
    return result;
}

} // namespace facpoly
