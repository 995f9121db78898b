#pragma once

#include "facpoly/difference_equation.hpp"
#include "facpoly/factorial_series.hpp"
#include "facpoly/rational.hpp"
#include "facpoly/weyl_operator.hpp"

#include <span>

namespace facpoly {

// Umbral exponential e(x, lambda) = sum lambda^n phi_n(x) / n! = (1 + lambda)^x,
// truncated at `order`.
FactorialSeries exp_series(const Rational& lambda, unsigned order);
RealFactorialSeries exp_series(Real lambda, unsigned order);

enum class TrigKind { cosine, sine };

// c(x) = sum (-1)^k phi_2k / (2k)!,  s(x) = sum (-1)^k phi_{2k+1} / (2k+1)!
FactorialSeries trig_series(TrigKind kind, unsigned order);

/// B_n(x) = beta_n(M) 1 with coefficient (-1)^k / (k! (n+k)! 2^(n+2k)) at
/// index n + 2k. Negative n is accepted and gives (-1)^n B_{|n|}, which is
/// what the same sum produces once 1/(n+k)! is read as 0 at the poles.
FactorialSeries bessel_series(int n, unsigned order);

// Truncation order sufficient to evaluate B_n exactly on 0 .. max_point.
unsigned bessel_order_for(long max_point);

// Exact Gaussian rational re + i im.
struct GaussianRational {
    Rational re;
    Rational im;

    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

GaussianRational pow(const GaussianRational& z, unsigned long n);

// e(m, lambda) for complex rational lambda, summed exactly as a finite factorial series.
GaussianRational umbral_exp_at(const GaussianRational& lambda, unsigned long m);

struct BesselRecurrenceReport {
    // max |B_n(x+1) - B_n(x) - (B_{n-1}(x) - B_{n+1}(x)) / 2|
    Rational shift_residual;
    // max |2n B_n(x) - x (B_{n-1}(x-1) + B_{n+1}(x-1))|
    Rational ladder_residual;
};

/// Checks both finite-difference Bessel recurrences exactly at the given
/// non-negative integer points. n = 0 uses B_{-1} = -B_1.
BesselRecurrenceReport verify_bessel_recurrences(int n, std::span<const long> points);

struct BesselEquationReport {
    // Residual of 2x(x-1) B(x-2) - x(2x-1) B(x-1) + (x^2 - n^2) B(x) per point.
    std::vector<Rational> residuals;
    Rational max_residual;
    // to_difference_equation((M P)^2 + M^2 - n^2) == {2x(x-1), -x(2x-1), x^2 - n^2}
    bool structure_matches = false;
};

// (M P)^2 + M^2 - n^2
WeylOperator bessel_operator(int n);

// 2x(x-1) f(x-2) - x(2x-1) f(x-1) + (x^2 - n^2) f(x) = 0
DifferenceEquation bessel_difference_equation(int n);

/// Exact residuals of the second-order Bessel difference equation; points >= 2.
BesselEquationReport verify_bessel_difference_equation(int n, std::span<const long> points);

} // namespace facpoly
