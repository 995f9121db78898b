#include "facpoly/frobenius.hpp"

#include "facpoly/errors.hpp"
#include "facpoly/factorial.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>

namespace facpoly {

namespace {

// Terms of A grouped by i - j; each group is the polynomial e -> sum c_ij phi_j(e).
std::map<long, Polynomial> grouped_by_offset(const WeylOperator& op) {
    if (op.is_zero()) throw ValidationError("indicial polynomial of the zero operator");
    std::map<long, Polynomial> groups;
    for (const auto& [mono, c] : op.terms()) {
        const long d = static_cast<long>(mono.m_power) - static_cast<long>(mono.p_power);
        groups[d] += falling_factorial_polynomial(mono.p_power) * c;
    }
    return groups;
}

std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    return out;
}

// Integer-coefficient multiple of p (clears denominators).
std::vector<Integer> primitive_integer_coeffs(const Polynomial& p) {
    Integer lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    for (const auto& c : p.coeffs()) out.push_back(Integer(c.get_num() * (lcm / c.get_den())));
    return out;
}

Polynomial deflate(Polynomial p, const Rational& r) {
    return divmod(p, Polynomial({Rational(-r), Rational(1)})).first;
}

} // namespace

Polynomial indicial_polynomial(const WeylOperator& op) { return grouped_by_offset(op).begin()->second; }

std::vector<Rational> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw ValidationError("rational_roots of the zero polynomial");
    std::vector<Rational> roots;
    Polynomial q = p;
    while (q.degree() > 0 && q.coeff(0) == 0) {
        if (roots.empty()) roots.push_back(0);
        q = deflate(q, 0);
    }
    if (q.degree() <= 0) return roots;

    const auto ints = primitive_integer_coeffs(q);
    const auto numerators = divisors(ints.front());
    const auto denominators = divisors(ints.back());
    for (const auto& num : numerators) {
        for (const auto& den : denominators) {
            for (int sign : {1, -1}) {
                Rational cand(Integer(sign * num), den);
                cand.canonicalize();
                if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
                if (q(cand) == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<std::complex<double>> irrational_roots(const Polynomial& p) {
    Polynomial q = p;
    for (const auto& r : rational_roots(p))
        while (q.degree() > 0 && q(r) == 0) q = deflate(q, r);
    const int n = q.degree();
    if (n <= 0) return {};

    // Durand-Kerner on the monic polynomial.
    std::vector<std::complex<double>> a(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>(k)] = Rational(q.coeff(static_cast<std::size_t>(k)) / q.leading()).get_d();
    auto eval = [&a](std::complex<double> z) {
        std::complex<double> acc = 0.0;
        for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
        return acc;
    };
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    const std::complex<double> seed(0.4, 0.9);
    for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::pow(seed, k);
    for (int iter = 0; iter < 500; ++iter) {
        double change = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            std::complex<double> denom = 1.0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) denom *= z[i] - z[j];
            const auto step = eval(z[i]) / denom;
            z[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-15) break;
    }
    std::sort(z.begin(), z.end(), [](auto l, auto r) { return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag(); });
    return z;
}

FrobeniusSolution solve_series(const WeylOperator& op, const Rational& root, unsigned order) {
    const auto groups = grouped_by_offset(op);
    const long d_min = groups.begin()->first;
    std::vector<Polynomial> by_delta(static_cast<std::size_t>(groups.rbegin()->first - d_min) + 1);
    for (const auto& [d, poly] : groups) by_delta[static_cast<std::size_t>(d - d_min)] = poly;

    FrobeniusSolution sol;
    sol.root = root;
    sol.indicial = by_delta.front();
    if (sol.indicial(root) != 0)
        throw NotARootError("c = " + to_string(root) + " is not a root of the indicial polynomial " + sol.indicial.to_string("c"));

    sol.coeffs.push_back(1);
    for (long k = 1; k <= static_cast<long>(order); ++k) {
        RecurrenceStep step;
        step.k = k;
        step.divisor = sol.indicial(Rational(root + k));
        if (step.divisor == 0)
            throw ResonanceError("resonance at k = " + std::to_string(k) + ": I(c + k) = 0 for c = " + to_string(root), k);
        Rational rhs = 0;
        for (std::size_t d = 1; d < by_delta.size(); ++d) {
            const Rational contribution = by_delta[d](Rational(root + (k - static_cast<long>(d))));
            step.contributions.push_back(contribution);
            if (static_cast<long>(d) <= k) rhs -= contribution * sol.coeffs[static_cast<std::size_t>(k) - d];
        }
        sol.coeffs.push_back(rhs / step.divisor);
        sol.trace.push_back(std::move(step));
    }

    if (is_integer(root) && root >= 0) {
        const auto c = root.get_num().get_ui();
        std::vector<Rational> series(c, Rational(0));
        series.insert(series.end(), sol.coeffs.begin(), sol.coeffs.end());
        sol.series = FactorialSeries::truncated(std::move(series));
    }
    return sol;
}

namespace {

template <typename T>
T residual_impl(const DifferenceEquation& eq, const BasicFactorialSeries<T>& f, std::span<const long> points) {
    T worst(0);
    for (long m : points) {
        T lhs(0);
        for (const auto& [shift, p] : eq.terms()) {
            const Rational weight = p(Rational(m));
            if (weight == 0) continue;
            const long arg = m + shift;
            if (arg < 0)
                throw OrderError("residual at m = " + std::to_string(m) + " needs f(" + std::to_string(arg) + ")");
            if constexpr (std::is_same_v<T, Rational>)
                lhs += weight * eval_at_integer(f, static_cast<unsigned long>(arg));
            else
                lhs += to_real(weight) * eval_at_integer(f, static_cast<unsigned long>(arg));
        }
        if constexpr (std::is_same_v<T, Rational>) {
            lhs -= eq.rhs()(Rational(m));
            worst = std::max(worst, abs(lhs));
        } else {
            lhs -= to_real(eq.rhs()(Rational(m)));
            worst = std::max(worst, std::fabs(lhs));
        }
    }
    return worst;
}

} // namespace

Rational residual(const DifferenceEquation& eq, const FactorialSeries& f, std::span<const long> points) {
    return residual_impl(eq, f, points);
}

double residual(const DifferenceEquation& eq, const RealFactorialSeries& f, std::span<const long> points) {
    return static_cast<double>(residual_impl(eq, f, points));
}

} // namespace facpoly
