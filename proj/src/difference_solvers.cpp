#include "facpoly/difference_solvers.hpp"

#include "facpoly/errors.hpp"
#include "facpoly/factorial.hpp"
#include "facpoly/factorial_series.hpp"
#include "facpoly/weyl_operator.hpp"

#include <algorithm>
#include <vector>

namespace facpoly {

Polynomial heat_propagate(const Polynomial& w, unsigned m) {
    Polynomial out;
    const Rational time(m);
    for (unsigned n = 0; n <= m; ++n) {
        Polynomial d = w.derivative(2 * n);
        if (d.is_zero()) break;
        out += d * (falling_factorial(time, n) / factorial(n));
    }
    return out;
}

Polynomial heat_step_oracle(const Polynomial& w, unsigned m) {
    Polynomial state = w;
    for (unsigned t = 0; t < m; ++t) state += state.derivative(2);
    return state;
}

Polynomial particular_solution(const Rational& a, const Rational& b, const Polynomial& g) {
    const Rational total = a + b;
    if (total == 0)
        throw DivergentResolventError("a + b = 0: the resolvent of a P + (a + b) does not exist");
    if (a == 0) return g / b;

    Polynomial out;
    Polynomial diff = g;
    Rational weight = 1 / total;
    while (!diff.is_zero()) {
        out += diff * weight;
        diff = diff.forward_difference();
        weight *= -a / total;
    }
    return out;
}

Polynomial particular_solution_resolvent(const Rational& a, const Rational& b, const Polynomial& g) {
    const Rational total = a + b;
    if (total == 0)
        throw DivergentResolventError("a + b = 0: the resolvent of a P + (a + b) does not exist");

    // Operator-valued polynomial in s: entry k multiplies s^k.
    using SPoly = std::vector<WeylOperator>;
    const SPoly argument = {WeylOperator::X(), WeylOperator::shift() * Rational(-a)};
    auto multiply = [](const SPoly& l, const SPoly& r) {
        SPoly out(l.size() + r.size() - 1);
        for (std::size_t i = 0; i < l.size(); ++i)
            for (std::size_t j = 0; j < r.size(); ++j) out[i + j] += l[i] * r[j];
        return out;
    };

    SPoly acc = {WeylOperator{}};
    const auto& c = g.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = multiply(acc, argument);
        acc[0] += WeylOperator::constant(*it);
    }

    // int_0^inf s^k e^{-s (a+b)} ds = k! / (a+b)^(k+1)
    WeylOperator resolved;
    for (std::size_t k = 0; k < acc.size(); ++k) resolved += acc[k] * (factorial(k) / pow(total, k + 1));

    const FactorialSeries y = apply_to_series(resolved, FactorialSeries::unit());
    return factorial_to_monomial(y.coeffs());
}

NonhomogeneousReport nonhomogeneous_general(const Rational& a, const Rational& b, const Polynomial& g,
                                            std::span<const long> points) {
    NonhomogeneousReport report;
    report.particular = particular_solution(a, b, g);
    if (a != 0) report.homogeneous_base = -b / a;
    for (long m : points) {
        const Rational x(m);
        const Rational r = a * report.particular(Rational(x + 1)) + b * report.particular(x) - g(x);
        report.residual = std::max(report.residual, abs(r));
    }
    return report;
}

} // namespace facpoly
