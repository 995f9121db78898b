#include "facpoly/difference_equation.hpp"

#include "facpoly/errors.hpp"
#include "facpoly/factorial.hpp"

namespace facpoly {

DifferenceEquation::DifferenceEquation(Terms terms, Polynomial rhs) : rhs_(std::move(rhs)) {
    for (auto& [shift, p] : terms)
        if (!p.is_zero()) terms_.emplace(shift, std::move(p));
    if (terms_.empty()) throw ValidationError("difference equation needs at least one nonzero shift term");
}

Polynomial DifferenceEquation::coeff(int shift) const {
    auto it = terms_.find(shift);
    return it == terms_.end() ? Polynomial{} : it->second;
}

DifferenceEquation DifferenceEquation::translated(int s) const {
    Terms out;
    for (const auto& [shift, p] : terms_) out.emplace(shift + s, p.translate(s));
    return DifferenceEquation(std::move(out), rhs_.translate(s));
}

std::string DifferenceEquation::to_string() const {
    std::string out;
    for (const auto& [shift, p] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + p.to_string() + ") f(x";
        if (shift > 0) out += " + " + std::to_string(shift);
        if (shift < 0) out += " - " + std::to_string(-shift);
        out += ")";
    }
    return out + " = " + rhs_.to_string();
}

namespace {

// p(X) (1 + P)^shift with X = M (1 + P); shift >= 0.
WeylOperator translate_term(const Polynomial& p, int shift) {
    return substitute(p, WeylOperator::X()) * WeylOperator::shift().pow(static_cast<unsigned>(shift));
}

} // namespace

OperatorForm from_difference_equation(const DifferenceEquation& eq) {
    if (!eq.is_homogeneous())
        throw ValidationError("operator translation needs a homogeneous equation; use the non-homogeneous solver");

    OperatorForm form;
    bool all_absorbed = true;
    for (const auto& [shift, p] : eq.terms()) {
        if (shift >= 0) {
            form.op += translate_term(p, shift);
            continue;
        }
        const auto k = static_cast<unsigned>(-shift);
        auto [quotient, remainder] = divmod(p, falling_factorial_polynomial(k));
        if (!remainder.is_zero()) {
            all_absorbed = false;
            break;
        }
        // q(x) phi_k(x) f(x - k) = q(X) M^k f
        form.op += substitute(quotient, WeylOperator::X()) * WeylOperator::M().pow(k);
    }
    if (all_absorbed) {
        form.absorbed = eq.min_shift() < 0;
        return form;
    }

    form = OperatorForm{};
    form.shift = -eq.min_shift();
    const DifferenceEquation moved = eq.translated(form.shift);
    for (const auto& [shift, p] : moved.terms()) form.op += translate_term(p, shift);
    return form;
}

DifferenceEquation to_difference_equation(const WeylOperator& op) {
    if (op.is_zero()) throw ValidationError("the zero operator has no difference equation");
    DifferenceEquation::Terms terms;
    for (const auto& [mono, c] : op.terms()) {
        const Polynomial phi = falling_factorial_polynomial(mono.m_power) * c;
        const unsigned j = mono.p_power;
        for (unsigned l = 0; l <= j; ++l) {
            Rational weight = binomial(j, l);
            if ((j - l) % 2 == 1) weight = -weight;
            const int shift = static_cast<int>(l) - static_cast<int>(mono.m_power);
            terms[shift] += phi * weight;
        }
    }
    return DifferenceEquation(std::move(terms));
}

} // namespace facpoly
