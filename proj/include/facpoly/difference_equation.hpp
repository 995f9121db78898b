#pragma once

#include "facpoly/polynomial.hpp"
#include "facpoly/weyl_operator.hpp"

#include <map>

namespace facpoly {

/// Linear difference equation sum_j p_j(x) f(x + j) = rhs(x).
///
/// Shifts are distinct integers and may be negative. At least one p_j is
/// nonzero; zero coefficient polynomials are dropped on construction.
class DifferenceEquation {
public:
    using Terms = std::map<int, Polynomial>;

    // Throws ValidationError when every coefficient is zero.
    explicit DifferenceEquation(Terms terms, Polynomial rhs = {});

    const Terms& terms() const noexcept { return terms_; }
    const Polynomial& rhs() const noexcept { return rhs_; }
    bool is_homogeneous() const noexcept { return rhs_.is_zero(); }
    int min_shift() const { return terms_.begin()->first; }
    int max_shift() const { return terms_.rbegin()->first; }
    Polynomial coeff(int shift) const;

    // Same equation written at x + s: coefficients p_j(x + s) at shifts j + s.
    DifferenceEquation translated(int s) const;

    friend bool operator==(const DifferenceEquation&, const DifferenceEquation&) = default;

    std::string to_string() const;

private:
    Terms terms_;
    Polynomial rhs_;
};

struct OperatorForm {
    WeylOperator op;
    // The operator acts on F directly and (op F)(x) equals the equation's
    // left-hand side evaluated at x + shift.
    int shift = 0;
    // True when every negative shift was absorbed as p(x) phi_k(x) f(x-k) = p(X) M^k f.
    bool absorbed = false;
};

/// Rewrites a homogeneous equation as an operator in M and P.
///
/// Negative shifts whose coefficient is divisible by phi_k(x) become M^k
/// directly. If any negative shift resists that, the equation is moved to
/// x + s with s = -min shift and translated with e^{d/dx} -> 1 + P and
/// x -> M (1 + P). Throws ValidationError for a non-homogeneous equation.
OperatorForm from_difference_equation(const DifferenceEquation& eq);

/// Expands M^i P^j = phi_i(x) e^{-i d/dx} (e^{d/dx} - 1)^j and collects shifts.
/// Throws ValidationError for the zero operator.
DifferenceEquation to_difference_equation(const WeylOperator& op);

} // namespace facpoly
