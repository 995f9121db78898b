#pragma once

// Reference computations that share no code path with the routines they
// check. The CLI's --verify flag and the test suites both use them.

#include "facpoly/polynomial.hpp"
#include "facpoly/rational.hpp"

#include <optional>
#include <vector>

namespace facpoly::oracle {

// Solves the square system A x = rhs exactly by Gauss-Jordan elimination.
// Empty optional when A is singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs);

/// Particular solution of a y(x+1) + b y(x) = g(x) by undetermined
/// coefficients: y has degree deg g and its coefficients solve a square
/// linear system. Empty optional when the system is singular (a + b = 0).
std::optional<Polynomial> undetermined_coefficients(const Rational& a, const Rational& b, const Polynomial& g);

// (z/a) ((x - z)^2 - z (1 - z)) with z = a/(a+b): the closed form for g = x^2.
Polynomial quadratic_particular_closed_form(const Rational& a, const Rational& b);

} // namespace facpoly::oracle
