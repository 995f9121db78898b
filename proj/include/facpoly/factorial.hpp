#pragma once

#include "facpoly/polynomial.hpp"
#include "facpoly/rational.hpp"

#include <cstddef>
#include <vector>

namespace facpoly {

/// Falling factorial x (x - 1) ... (x - n + 1) in product form.
///
/// Total for every x: the empty product gives 1 for n = 0, and an integer
/// 0 <= x < n hits the zero factor. Exact for Rational arguments.
template <typename T>
T falling_factorial(const T& x, unsigned n) {
    T result(1);
    for (unsigned k = 0; k < n; ++k) result *= T(x - T(k));
    return result;
}

/// Gamma ratio Gamma(x + 1) / Gamma(x + 1 - nu) for real nu.
///
/// Evaluated through log-gamma with explicit sign tracking. A pole of the
/// denominator alone yields 0; coincident poles of numerator and denominator
/// (integer nu) take the finite limit; a pole of the numerator alone throws
/// PoleError naming the offending factor.
double falling_factorial_real(double x, double nu);

// Triangular tables of Stirling numbers, exact.
class StirlingTable {
public:
    static constexpr std::size_t default_bound = 64;

    explicit StirlingTable(std::size_t bound = default_bound);

    std::size_t bound() const noexcept { return bound_; }

    // Signed first kind s(n, k): phi_n(x) = sum_k s(n, k) x^k.
    const Integer& first(std::size_t n, std::size_t k) const;
    // Second kind S(n, k): x^n = sum_k S(n, k) phi_k(x).
    const Integer& second(std::size_t n, std::size_t k) const;

private:
    std::size_t bound_;
    std::vector<std::vector<Integer>> first_;
    std::vector<std::vector<Integer>> second_;
};

// Process-wide table up to StirlingTable::default_bound, built once on first use.
const StirlingTable& stirling_table();

// phi_n(x) expanded in the monomial basis.
Polynomial falling_factorial_polynomial(unsigned n);

// Coefficients b with sum_k b_k phi_k(x) == p(x). Empty for the zero polynomial.
std::vector<Rational> monomial_to_factorial(const Polynomial& p);

// Inverse of monomial_to_factorial.
Polynomial factorial_to_monomial(const std::vector<Rational>& b);

} // namespace facpoly
