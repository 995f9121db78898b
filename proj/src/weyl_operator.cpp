#include "facpoly/weyl_operator.hpp"

#include "facpoly/factorial.hpp"

#include <algorithm>

namespace facpoly {

WeylOperator::WeylOperator(Terms terms) {
    for (const auto& [mono, c] : terms) add_term(mono, c);
}

WeylOperator WeylOperator::constant(const Rational& c) { return term(0, 0, c); }

WeylOperator WeylOperator::term(unsigned m_power, unsigned p_power, const Rational& c) {
    WeylOperator op;
    op.add_term({m_power, p_power}, c);
    return op;
}

WeylOperator WeylOperator::X() { return term(1, 0) + term(1, 1); }

Rational WeylOperator::coeff(unsigned m_power, unsigned p_power) const {
    auto it = terms_.find({m_power, p_power});
    return it == terms_.end() ? Rational(0) : it->second;
}

void WeylOperator::add_term(const WeylMonomial& mono, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

WeylOperator WeylOperator::pow(unsigned exponent) const {
    WeylOperator result = identity();
    WeylOperator base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& rhs) {
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
    return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& rhs) {
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
    return *this;
}

WeylOperator& WeylOperator::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, v] : terms_) v *= c;
    return *this;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
    // (M^i1 P^j1)(M^i2 P^j2) = sum_k C(j1, k) phi_k(i2) M^(i1+i2-k) P^(j1+j2-k)
    WeylOperator out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            const Rational c = ca * cb;
            const unsigned top = std::min(ma.p_power, mb.m_power);
            for (unsigned k = 0; k <= top; ++k) {
                const Rational weight = binomial(ma.p_power, k) * falling_factorial(Rational(mb.m_power), k);
                out.add_term({ma.m_power + mb.m_power - k, ma.p_power + mb.p_power - k}, c * weight);
            }
        }
    }
    return out;
}

WeylOperator multiply(const WeylOperator& a, const WeylOperator& b) { return a * b; }

WeylOperator commutator(const WeylOperator& a, const WeylOperator& b) { return a * b - b * a; }

WeylOperator substitute(const Polynomial& p, const WeylOperator& arg) {
    WeylOperator acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * arg;
        acc += WeylOperator::constant(*it);
    }
    return acc;
}

std::string WeylOperator::to_string() const {
    if (terms_.empty()) return "0";
    auto word = [](const WeylMonomial& m) {
        std::string s;
        auto factor = [&s](const char* sym, unsigned e) {
            if (e == 0) return;
            if (!s.empty()) s += " ";
            s += sym;
            if (e > 1) s += "^" + std::to_string(e);
        };
        factor("M", m.m_power);
        factor("P", m.p_power);
        return s;
    };
    // Highest total degree first reads more naturally.
    std::vector<std::pair<WeylMonomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
        const unsigned dl = l.first.m_power + l.first.p_power;
        const unsigned dr = r.first.m_power + r.first.p_power;
        if (dl != dr) return dl > dr;
        return l.first.m_power > r.first.m_power;
    });
    std::string out;
    for (const auto& [mono, c] : ordered) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const std::string w = word(mono);
        if (w.empty()) {
            out += facpoly::to_string(mag);
        } else {
            if (mag != 1) out += facpoly::to_string(mag) + " ";
            out += w;
        }
    }
    return out;
}

} // namespace facpoly
