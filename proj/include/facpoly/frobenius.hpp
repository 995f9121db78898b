#pragma once

#include "facpoly/difference_equation.hpp"
#include "facpoly/factorial_series.hpp"
#include "facpoly/polynomial.hpp"
#include "facpoly/weyl_operator.hpp"

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace facpoly {

/// Indicial polynomial of A acting on sum_k a_k M^(k + c) 1.
///
/// With d_min the smallest i - j over the terms of A, this is
/// I(c) = sum_{i - j = d_min} c_ij phi_j(c): the factor multiplying a_0 at the
/// lowest power of M. Throws ValidationError for the zero operator.
Polynomial indicial_polynomial(const WeylOperator& op);

// Distinct rational roots, ascending. Exact, via the rational root theorem.
std::vector<Rational> rational_roots(const Polynomial& p);

// Roots left after dividing out every rational root, found numerically.
std::vector<std::complex<double>> irrational_roots(const Polynomial& p);

// One step of the coefficient recurrence I_0(c + k) a_k = -sum_d I_d(c + k - d) a_{k-d}.
struct RecurrenceStep {
    long k = 0;
    Rational divisor;                   // I_0(c + k)
    std::vector<Rational> contributions; // entry d-1 is I_d(c + k - d), d = 1, 2, ...
};

struct FrobeniusSolution {
    Rational root;
    // a_0 .. a_K with a_0 = 1.
    std::vector<Rational> coeffs;
    Polynomial indicial;
    std::vector<RecurrenceStep> trace;
    // Present when the root is a non-negative integer: sum_k a_k phi_{k + c}.
    // Other roots yield a formal solution only.
    std::optional<FactorialSeries> series;
    // Filled in by callers that verify against an equation.
    std::optional<Rational> residual;

    bool is_formal() const noexcept { return !series.has_value(); }
};

/// Frobenius coefficients a_0 .. a_order for root c of the indicial polynomial.
/// Throws NotARootError if I(c) != 0 and ResonanceError (naming k) if
/// I(c + k) = 0 for some 1 <= k <= order.
FrobeniusSolution solve_series(const WeylOperator& op, const Rational& root, unsigned order);

/// max_m |sum_j p_j(m) f(m + j) - rhs(m)| over the given points.
/// Terms whose coefficient vanishes at m are skipped without evaluating f,
/// so a point may lie where f(m + j) is undefined if p_j(m) = 0.
Rational residual(const DifferenceEquation& eq, const FactorialSeries& f, std::span<const long> points);
double residual(const DifferenceEquation& eq, const RealFactorialSeries& f, std::span<const long> points);

} // namespace facpoly
