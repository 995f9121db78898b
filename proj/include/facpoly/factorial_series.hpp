#pragma once

#include "facpoly/errors.hpp"
#include "facpoly/rational.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace facpoly {

// Whether the stored coefficients describe the whole function (a finite
// factorial-polynomial sum) or only a prefix of an infinite series.
enum class Extent { complete, truncated };

/// Newton (factorial) series f(x) = sum_n a_n phi_n(x).
///
/// A truncated series knows a_0 .. a_K exactly, K = order(); anything past K
/// is unknown. A complete series is a finite sum whose coefficients past the
/// stored ones are zero. Operators record the order they lose: P and the
/// shift consume one coefficient, M gains one.
///
/// Evaluation at a non-negative integer m only reads a_0 .. a_m, because
/// phi_n(m) = 0 for n > m. That is what makes truncated series exactly
/// evaluable on 0 .. K.
template <typename T>
class BasicFactorialSeries {
public:
    using value_type = T;

    // The zero function.
    BasicFactorialSeries() = default;

    BasicFactorialSeries(std::vector<T> coeffs, Extent extent) : coeffs_(std::move(coeffs)), extent_(extent) {
        normalize();
    }

    static BasicFactorialSeries complete(std::vector<T> coeffs) { return {std::move(coeffs), Extent::complete}; }
    static BasicFactorialSeries truncated(std::vector<T> coeffs) { return {std::move(coeffs), Extent::truncated}; }
    // phi_0 = 1
    static BasicFactorialSeries unit() { return complete({T(1)}); }
    // phi_n
    static BasicFactorialSeries basis(unsigned n) {
        std::vector<T> c(n + 1, T(0));
        c[n] = T(1);
        return complete(std::move(c));
    }

    const std::vector<T>& coeffs() const noexcept { return coeffs_; }
    Extent extent() const noexcept { return extent_; }
    bool is_complete() const noexcept { return extent_ == Extent::complete; }
    // Highest index with a known coefficient; -1 when nothing is stored.
    long order() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    // a_n; zero past the end of a complete series, OrderError past a truncated one.
    T coeff(std::size_t n) const {
        if (n < coeffs_.size()) return coeffs_[n];
        if (is_complete()) return T(0);
        throw OrderError("coefficient " + std::to_string(n) + " lies beyond truncation order " + std::to_string(order()));
    }

    // Keeps a_0 .. a_k and marks the result truncated.
    BasicFactorialSeries truncate(long k) const {
        std::vector<T> c;
        for (long n = 0; n <= k; ++n) c.push_back(coeff(static_cast<std::size_t>(n)));
        return truncated(std::move(c));
    }

    BasicFactorialSeries& operator*=(const T& s) {
        for (auto& a : coeffs_) a *= s;
        normalize();
        return *this;
    }

    friend BasicFactorialSeries operator*(BasicFactorialSeries f, const T& s) { return f *= s; }
    friend BasicFactorialSeries operator*(const T& s, BasicFactorialSeries f) { return f *= s; }

    friend BasicFactorialSeries operator+(const BasicFactorialSeries& f, const BasicFactorialSeries& g) {
        return combine(f, g, T(1));
    }
    friend BasicFactorialSeries operator-(const BasicFactorialSeries& f, const BasicFactorialSeries& g) {
        return combine(f, g, T(-1));
    }

    friend bool operator==(const BasicFactorialSeries&, const BasicFactorialSeries&) = default;

private:
    static BasicFactorialSeries combine(const BasicFactorialSeries& f, const BasicFactorialSeries& g, const T& sign) {
        Extent extent = Extent::complete;
        std::size_t size = std::max(f.coeffs_.size(), g.coeffs_.size());
        if (!f.is_complete() || !g.is_complete()) {
            extent = Extent::truncated;
            size = std::min(f.is_complete() ? size : f.coeffs_.size(), g.is_complete() ? size : g.coeffs_.size());
        }
        std::vector<T> c(size, T(0));
        for (std::size_t n = 0; n < size; ++n) {
            if (n < f.coeffs_.size()) c[n] += f.coeffs_[n];
            if (n < g.coeffs_.size()) c[n] += sign * g.coeffs_[n];
        }
        return {std::move(c), extent};
    }

    void normalize() {
        if (is_complete())
            while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
    Extent extent_ = Extent::complete;
};

// Scalar of the float backend. Extended precision: factorial sums at integer
// points can be badly conditioned (sum |terms| / |sum| = 3^m for e(m, -1/2)).
using Real = long double;

using FactorialSeries = BasicFactorialSeries<Rational>;
using RealFactorialSeries = BasicFactorialSeries<Real>;

// Nearest Real to q.
Real to_real(const Rational& q);
inline Real to_real(Real v) { return v; }

// Explicit conversion from the exact backend to the float backend.
RealFactorialSeries to_real(const FactorialSeries& f);

/// M: phi_n -> phi_{n+1}; pointwise (M f)(x) = x f(x - 1).
template <typename T>
BasicFactorialSeries<T> apply_M(const BasicFactorialSeries<T>& f) {
    if (f.is_complete() && f.coeffs().empty()) return f;
    std::vector<T> c;
    c.reserve(f.coeffs().size() + 1);
    c.push_back(T(0));
    c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
    return {std::move(c), f.extent()};
}

/// P: phi_n -> n phi_{n-1}; pointwise (P f)(x) = f(x + 1) - f(x).
template <typename T>
BasicFactorialSeries<T> apply_P(const BasicFactorialSeries<T>& f) {
    const auto& a = f.coeffs();
    std::vector<T> c;
    for (std::size_t n = 0; n + 1 < a.size(); ++n) c.push_back(T(static_cast<long>(n + 1)) * a[n + 1]);
    return {std::move(c), f.extent()};
}

/// Multiplication by x, realized as M (1 + P): b_n = a_{n-1} + n a_n.
template <typename T>
BasicFactorialSeries<T> apply_x(const BasicFactorialSeries<T>& f) {
    const auto& a = f.coeffs();
    const std::size_t size = f.is_complete() ? a.size() + 1 : a.size();
    std::vector<T> c(size, T(0));
    for (std::size_t n = 0; n < size; ++n) {
        if (n >= 1) c[n] += a[n - 1];
        if (n < a.size()) c[n] += T(static_cast<long>(n)) * a[n];
    }
    return {std::move(c), f.extent()};
}

/// Unit shift e^{d/dx} = 1 + P: pointwise f(x + 1).
template <typename T>
BasicFactorialSeries<T> apply_shift(const BasicFactorialSeries<T>& f) {
    const auto& a = f.coeffs();
    const std::size_t size = f.is_complete() ? a.size() : (a.empty() ? 0 : a.size() - 1);
    std::vector<T> c(size, T(0));
    for (std::size_t n = 0; n < size; ++n) {
        c[n] = a[n];
        if (n + 1 < a.size()) c[n] += T(static_cast<long>(n + 1)) * a[n + 1];
    }
    return {std::move(c), f.extent()};
}

/// Exact value at a non-negative integer: sum_{n <= m} a_n phi_n(m).
template <typename T>
T eval_at_integer(const BasicFactorialSeries<T>& f, unsigned long m) {
    if (!f.is_complete() && static_cast<long>(m) > f.order())
        throw OrderError("evaluation at " + std::to_string(m) + " needs coefficients through index " + std::to_string(m) +
                         " but the series is truncated at order " + std::to_string(f.order()));
    const auto& a = f.coeffs();
    const std::size_t top = std::min<std::size_t>(m + 1, a.size());
    T sum(0);
    T phi(1);
    for (std::size_t n = 0; n < top; ++n) {
        sum += a[n] * phi;
        phi *= T(static_cast<long>(m - n));
    }
    return sum;
}

// Partial sum through `order` at an arbitrary argument of the series' scalar type.
template <typename T>
T partial_sum(const BasicFactorialSeries<T>& f, const T& x, long order) {
    T sum(0);
    T phi(1);
    for (long n = 0; n <= order; ++n) {
        sum += f.coeff(static_cast<std::size_t>(n)) * phi;
        phi *= T(x - T(n));
    }
    return sum;
}

struct RealEvaluation {
    double value = 0.0;
    // |a_n phi_n(x)| for the largest n <= order with a_n != 0, so sparse series
    // (odd or even terms only) do not report a structural zero. A heuristic
    // only; nothing here asserts convergence.
    double remainder = 0.0;
};

/// Partial sum through `order` at real x, accumulated in Real precision.
template <typename T>
RealEvaluation eval_at_real(const BasicFactorialSeries<T>& f, double x, long order) {
    if (order < 0) throw ValidationError("eval_at_real: order must be positive");
    if (!f.is_complete() && order > f.order())
        throw OrderError("eval_at_real: order " + std::to_string(order) + " exceeds truncation order " + std::to_string(f.order()));
    Real sum = 0;
    Real phi = 1;
    Real last = 0;
    for (long n = 0; n <= order; ++n) {
        const T a = f.coeff(static_cast<std::size_t>(n));
        const Real term = to_real(a) * phi;
        sum += term;
        if (a != T(0)) last = term;
        phi *= static_cast<Real>(x) - static_cast<Real>(n);
    }
    return {static_cast<double>(sum), static_cast<double>(std::fabs(last))};
}

} // namespace facpoly
