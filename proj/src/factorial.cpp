#include "facpoly/factorial.hpp"

#include "facpoly/errors.hpp"

#include <cmath>
#include <memory>
#include <sstream>

namespace facpoly {

namespace {

// y is a pole of Gamma when it is a non-positive integer.
bool is_gamma_pole(double y) { return y <= 0.0 && std::floor(y) == y; }

double log_abs_gamma(double y, int& sign) {
    int s = 1;
    double v = ::lgamma_r(y, &s);
    sign = s;
    return v;
}

std::string describe(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::unique_ptr<StirlingTable> table_for(std::size_t n) {
    if (n <= stirling_table().bound()) return nullptr;
    return std::make_unique<StirlingTable>(n);
}

} // namespace

double falling_factorial_real(double x, double nu) {
    if (!std::isfinite(x) || !std::isfinite(nu)) throw ValidationError("falling_factorial_real: non-finite argument");

    const double top = x + 1.0;
    const double bottom = x + 1.0 - nu;
    const bool top_pole = is_gamma_pole(top);
    const bool bottom_pole = is_gamma_pole(bottom);

    if (top_pole && bottom_pole) {
        // Gamma(-p + e) ~ (-1)^p / (p! e), so the ratio tends to (-1)^(p-q) q! / p!.
        const double p = -top;
        const double q = -bottom;
        int s1 = 1;
        int s2 = 1;
        const double log_ratio = log_abs_gamma(q + 1.0, s1) - log_abs_gamma(p + 1.0, s2);
        const bool odd = std::fmod(std::fabs(p - q), 2.0) == 1.0;
        return (odd ? -1.0 : 1.0) * std::exp(log_ratio);
    }
    if (top_pole)
        throw PoleError("falling_factorial_real(" + describe(x) + ", " + describe(nu) + "): numerator Gamma(x + 1) has a pole at " +
                        describe(top));
    if (bottom_pole) return 0.0;

    int s_top = 1;
    int s_bottom = 1;
    const double log_top = log_abs_gamma(top, s_top);
    const double log_bottom = log_abs_gamma(bottom, s_bottom);
    return static_cast<double>(s_top * s_bottom) * std::exp(log_top - log_bottom);
}

StirlingTable::StirlingTable(std::size_t bound) : bound_(bound), first_(bound + 1), second_(bound + 1) {
    for (std::size_t n = 0; n <= bound; ++n) {
        first_[n].assign(n + 1, Integer(0));
        second_[n].assign(n + 1, Integer(0));
    }
    first_[0][0] = 1;
    second_[0][0] = 1;
    for (std::size_t n = 1; n <= bound; ++n) {
        const unsigned long m = n - 1;
        for (std::size_t k = 1; k <= n; ++k) {
            const Integer prev_first = k <= m ? first_[m][k] : Integer(0);
            const Integer prev_second = k <= m ? second_[m][k] : Integer(0);
            // s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)
            first_[n][k] = first_[m][k - 1] - m * prev_first;
            // S(n, k) = S(n-1, k-1) + k S(n-1, k)
            second_[n][k] = second_[m][k - 1] + static_cast<unsigned long>(k) * prev_second;
        }
    }
}

const Integer& StirlingTable::first(std::size_t n, std::size_t k) const {
    if (n > bound_ || k > n) throw ValidationError("Stirling index out of table range");
    return first_[n][k];
}

const Integer& StirlingTable::second(std::size_t n, std::size_t k) const {
    if (n > bound_ || k > n) throw ValidationError("Stirling index out of table range");
    return second_[n][k];
}

const StirlingTable& stirling_table() {
    static const StirlingTable table;
    return table;
}

Polynomial falling_factorial_polynomial(unsigned n) {
    auto local = table_for(n);
    const StirlingTable& t = local ? *local : stirling_table();
    std::vector<Rational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) c[k] = Rational(t.first(n, k));
    return Polynomial(std::move(c));
}

std::vector<Rational> monomial_to_factorial(const Polynomial& p) {
    if (p.is_zero()) return {};
    const auto deg = static_cast<std::size_t>(p.degree());
    auto local = table_for(deg);
    const StirlingTable& t = local ? *local : stirling_table();
    std::vector<Rational> b(deg + 1);
    for (std::size_t n = 0; n <= deg; ++n) {
        const Rational& a = p.coeffs()[n];
        if (a == 0) continue;
        for (std::size_t k = 0; k <= n; ++k) b[k] += a * t.second(n, k);
    }
    return b;
}

Polynomial factorial_to_monomial(const std::vector<Rational>& b) {
    if (b.empty()) return {};
    const std::size_t top = b.size() - 1;
    auto local = table_for(top);
    const StirlingTable& t = local ? *local : stirling_table();
    std::vector<Rational> a(b.size());
    for (std::size_t n = 0; n <= top; ++n) {
        if (b[n] == 0) continue;
        for (std::size_t k = 0; k <= n; ++k) a[k] += b[n] * t.first(n, k);
    }
    return Polynomial(std::move(a));
}

} // namespace facpoly
