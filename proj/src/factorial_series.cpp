#include "facpoly/factorial_series.hpp"

#include <cstdlib>
#include <string>

namespace facpoly {

Real to_real(const Rational& q) {
    if (q == 0) return 0;
    // 30 significant decimal digits round-trip through strtold to the nearest Real.
    mpf_class f(q, 128);
    mp_exp_t exponent = 0;
    std::string digits = f.get_str(exponent, 10, 30);
    const bool negative = digits.front() == '-';
    if (negative) digits.erase(0, 1);
    const std::string text = (negative ? "-0." : "0.") + digits + "e" + std::to_string(exponent);
    return std::strtold(text.c_str(), nullptr);
}

RealFactorialSeries to_real(const FactorialSeries& f) {
    std::vector<Real> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.push_back(to_real(a));
    return {std::move(c), f.extent()};
}

} // namespace facpoly
