#include "facpoly/oracles.hpp"

namespace facpoly::oracle {

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        const Rational inv = 1 / a[col][col];
        for (auto& v : a[col]) v *= inv;
        rhs[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational factor = a[row][col];
            for (std::size_t k = 0; k < n; ++k) a[row][k] -= factor * a[col][k];
            rhs[row] -= factor * rhs[col];
        }
    }
    return rhs;
}

std::optional<Polynomial> undetermined_coefficients(const Rational& a, const Rational& b, const Polynomial& g) {
    if (g.is_zero()) return Polynomial{};
    const auto n = static_cast<std::size_t>(g.degree()) + 1;
    // Column k holds the monomial coefficients of a (x+1)^k + b x^k.
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
    for (std::size_t k = 0; k < n; ++k) {
        Rational binom = 1;
        for (std::size_t r = 0; r <= k; ++r) {
            // C(k, r) built incrementally
            matrix[r][k] += a * binom;
            binom = binom * static_cast<unsigned long>(k - r) / static_cast<unsigned long>(r + 1);
        }
        matrix[k][k] += b;
    }
    auto solution = solve_linear(std::move(matrix), g.coeffs());
    if (!solution) return std::nullopt;
    return Polynomial(std::move(*solution));
}

Polynomial quadratic_particular_closed_form(const Rational& a, const Rational& b) {
    const Rational z = a / (a + b);
    const Polynomial x_minus_z({Rational(-z), Rational(1)});
    return (x_minus_z * x_minus_z - Polynomial::constant(z * (1 - z))) * (z / a);
}

} // namespace facpoly::oracle
