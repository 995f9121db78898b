#include "facpoly/special_series.hpp"

#include "facpoly/errors.hpp"
#include "facpoly/frobenius.hpp"

#include <algorithm>
#include <cstdlib>

namespace facpoly {

FactorialSeries exp_series(const Rational& lambda, unsigned order) {
    std::vector<Rational> c(order + 1);
    Rational term = 1;
    for (unsigned n = 0; n <= order; ++n) {
        c[n] = term;
        term = term * lambda / (n + 1);
    }
    return FactorialSeries::truncated(std::move(c));
}

RealFactorialSeries exp_series(Real lambda, unsigned order) {
    std::vector<Real> c(order + 1);
    Real term = 1;
    for (unsigned n = 0; n <= order; ++n) {
        c[n] = term;
        term *= lambda / static_cast<Real>(n + 1);
    }
    return RealFactorialSeries::truncated(std::move(c));
}

FactorialSeries trig_series(TrigKind kind, unsigned order) {
    std::vector<Rational> c(order + 1);
    const unsigned start = kind == TrigKind::cosine ? 0 : 1;
    for (unsigned n = start; n <= order; n += 2) {
        const unsigned k = n / 2;
        c[n] = Rational(k % 2 == 0 ? 1 : -1) / factorial(n);
    }
    return FactorialSeries::truncated(std::move(c));
}

FactorialSeries bessel_series(int n, unsigned order) {
    if (n < 0) {
        FactorialSeries f = bessel_series(-n, order);
        return (-n) % 2 == 0 ? f : f * Rational(-1);
    }
    const auto base = static_cast<unsigned>(n);
    if (order < base) throw ValidationError("bessel_series: order must be at least n");
    std::vector<Rational> c(order + 1);
    for (unsigned k = 0; base + 2 * k <= order; ++k) {
        Rational coeff = factorial(k) * factorial(base + k) * pow(Rational(2), base + 2 * k);
        coeff = Rational(k % 2 == 0 ? 1 : -1) / coeff;
        c[base + 2 * k] = coeff;
    }
    return FactorialSeries::truncated(std::move(c));
}

unsigned bessel_order_for(long max_point) { return static_cast<unsigned>(std::max(0L, max_point)) + 1; }

GaussianRational pow(const GaussianRational& z, unsigned long n) {
    GaussianRational result{1, 0};
    GaussianRational base = z;
    while (n > 0) {
        if (n & 1ul) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

GaussianRational umbral_exp_at(const GaussianRational& lambda, unsigned long m) {
    // sum_{n <= m} lambda^n phi_n(m) / n! = sum_n C(m, n) lambda^n
    GaussianRational sum{0, 0};
    GaussianRational power{1, 0};
    for (unsigned long n = 0; n <= m; ++n) {
        const Rational w = binomial(m, n);
        sum.re += w * power.re;
        sum.im += w * power.im;
        power = power * lambda;
    }
    return sum;
}

namespace {

long max_point(std::span<const long> points) {
    long top = 0;
    for (long m : points) {
        if (m < 0) throw ValidationError("Bessel verification points must be non-negative");
        top = std::max(top, m);
    }
    return top;
}

} // namespace

BesselRecurrenceReport verify_bessel_recurrences(int n, std::span<const long> points) {
    const unsigned order = bessel_order_for(max_point(points) + 1) + static_cast<unsigned>(std::abs(n)) + 1;
    const FactorialSeries lower = bessel_series(n - 1, order);
    const FactorialSeries mid = bessel_series(n, order);
    const FactorialSeries upper = bessel_series(n + 1, order);

    BesselRecurrenceReport report;
    for (long m : points) {
        const auto x = static_cast<unsigned long>(m);
        const Rational shift = eval_at_integer(mid, x + 1) - eval_at_integer(mid, x) -
                               (eval_at_integer(lower, x) - eval_at_integer(upper, x)) / 2;
        report.shift_residual = std::max(report.shift_residual, abs(shift));

        Rational ladder = 2 * n * eval_at_integer(mid, x);
        // x = 0 multiplies the bracket by zero; B(-1) is never needed.
        if (x > 0) ladder -= Rational(m) * (eval_at_integer(lower, x - 1) + eval_at_integer(upper, x - 1));
        report.ladder_residual = std::max(report.ladder_residual, abs(ladder));
    }
    return report;
}

WeylOperator bessel_operator(int n) {
    const WeylOperator mp = WeylOperator::M() * WeylOperator::P();
    return mp * mp + WeylOperator::M().pow(2) - WeylOperator::constant(Rational(n) * n);
}

DifferenceEquation bessel_difference_equation(int n) {
    return DifferenceEquation({
        {-2, Polynomial({0, -2, 2})},
        {-1, Polynomial({0, 1, -2})},
        {0, Polynomial({Rational(-n) * n, 0, 1})},
    });
}

BesselEquationReport verify_bessel_difference_equation(int n, std::span<const long> points) {
    for (long m : points)
        if (m < 2) throw ValidationError("Bessel difference equation points must be >= 2");
    const FactorialSeries b = bessel_series(n, bessel_order_for(max_point(points)) + static_cast<unsigned>(std::abs(n)));
    const DifferenceEquation eq = bessel_difference_equation(n);

    BesselEquationReport report;
    for (long m : points) {
        const long single[] = {m};
        report.residuals.push_back(residual(eq, b, single));
        report.max_residual = std::max(report.max_residual, report.residuals.back());
    }
    report.structure_matches = to_difference_equation(bessel_operator(n)) == eq;
    return report;
}

} // namespace facpoly
