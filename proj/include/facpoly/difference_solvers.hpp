#pragma once

#include "facpoly/polynomial.hpp"
#include "facpoly/rational.hpp"

#include <optional>
#include <span>

namespace facpoly {

/// Discrete-time heat propagator for W(x, t+1) - W(x, t) = W''(x, t), W(x, 0) = w.
///
/// Returns W(x, m) = sum_{n=0}^{m} phi_n(m)/n! w^(2n)(x). The sum stops at m
/// because phi_{m+1}(m) = 0.
Polynomial heat_propagate(const Polynomial& w, unsigned m);

// Reference stepping: W <- W + W'' applied m times.
Polynomial heat_step_oracle(const Polynomial& w, unsigned m);

/// Polynomial particular solution of a y(x+1) + b y(x) = g(x).
///
/// Uses y_p = sum_k (-a)^k Delta^k g / (a+b)^(k+1), the closed form of the
/// resolvent integral of a P + (a + b). For a = 0 this reduces to g / b.
/// Throws DivergentResolventError when a + b = 0.
Polynomial particular_solution(const Rational& a, const Rational& b, const Polynomial& g);

/// Same particular solution computed in the operator algebra: expands
/// g((M - a s)(1 + P)) as a polynomial in s, integrates each s^k against
/// e^{-s (a+b)} to k!/(a+b)^(k+1), applies the result to 1 and converts the
/// factorial series back to monomials.
Polynomial particular_solution_resolvent(const Rational& a, const Rational& b, const Polynomial& g);

struct NonhomogeneousReport {
    Polynomial particular;
    // y_h(x) = C * base^x; absent when a = 0.
    std::optional<Rational> homogeneous_base;
    // max |a y_p(x+1) + b y_p(x) - g(x)| over the requested points.
    Rational residual;
};

NonhomogeneousReport nonhomogeneous_general(const Rational& a, const Rational& b, const Polynomial& g,
                                            std::span<const long> points);

} // namespace facpoly
