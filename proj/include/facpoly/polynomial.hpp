#pragma once

#include "facpoly/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace facpoly {

// Dense univariate polynomial over the rationals in the monomial basis.
// coeffs()[k] multiplies x^k. The zero polynomial has no stored coefficients
// and the highest stored coefficient is never zero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(unsigned degree, const Rational& c = 1);
    // x
    static Polynomial identity();

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    std::span<const Rational> view() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of x^k; zero past the degree.
    Rational coeff(std::size_t k) const;
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

    Polynomial derivative(unsigned times = 1) const;
    // p(x + s)
    Polynomial translate(const Rational& s) const;
    // p(x + 1) - p(x)
    Polynomial forward_difference() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);
    Polynomial& operator/=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Euclidean division: returns (quotient, remainder) with deg r < deg d.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& n, const Polynomial& d);

    // Human-readable form in the variable `var`, e.g. "x^2 - x + 1/2".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

} // namespace facpoly
