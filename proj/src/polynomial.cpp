#include "facpoly/polynomial.hpp"

#include "facpoly/errors.hpp"

#include <algorithm>

namespace facpoly {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(unsigned degree, const Rational& c) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::identity() { return monomial(1); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Polynomial Polynomial::derivative(unsigned times) const {
    if (times >= coeffs_.size()) return {};
    std::vector<Rational> out(coeffs_.size() - times);
    for (std::size_t k = times; k < coeffs_.size(); ++k) {
        Rational scale = 1;
        for (std::size_t t = 0; t < times; ++t) scale *= static_cast<unsigned long>(k - t);
        out[k - times] = coeffs_[k] * scale;
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::translate(const Rational& s) const {
    // Horner in the shifted variable: p(x + s) = (...(a_n (x+s) + a_{n-1})(x+s) + ...).
    const Polynomial shifted_x({s, Rational(1)});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= shifted_x;
        acc += constant(*it);
    }
    return acc;
}

Polynomial Polynomial::forward_difference() const { return translate(1) - *this; }

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
    if (c == 0) throw ValidationError("polynomial division by zero scalar");
    for (auto& a : coeffs_) a /= c;
    return *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& n, const Polynomial& d) {
    if (d.is_zero()) throw ValidationError("polynomial division by zero polynomial");
    std::vector<Rational> rem = n.coeffs_;
    const auto dd = static_cast<std::size_t>(d.degree());
    if (rem.size() <= dd) return {Polynomial{}, n};
    std::vector<Rational> quot(rem.size() - dd);
    for (std::size_t k = rem.size(); k-- > dd;) {
        Rational q = rem[k] / d.leading();
        quot[k - dd] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d.coeffs_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = mag == 1 && k > 0;
        if (!unit) out += facpoly::to_string(mag);
        if (k > 0) {
            if (!unit) out += " ";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace facpoly
