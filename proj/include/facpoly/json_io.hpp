#pragma once

#include "facpoly/difference_equation.hpp"
#include "facpoly/factorial_series.hpp"
#include "facpoly/frobenius.hpp"
#include "facpoly/polynomial.hpp"
#include "facpoly/weyl_operator.hpp"

#include <json.hpp>

// JSON forms used by the command-line tool. Rationals travel as "p/q"
// strings; float-backend values are plain JSON numbers.
//
//   Polynomial         {"basis": "monomial", "coeffs": ["p/q", ...]}  (a bare array is also accepted)
//   FactorialSeries    {"basis": "factorial", "coeffs": [...], "exact": bool, "order": K}
//   DifferenceEquation {"terms": [{"shift": j, "poly": [...]}], "rhs": [...]}
//
// Every from_json throws ValidationError on malformed input.
namespace facpoly::io {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const FactorialSeries& f);
Json to_json(const RealFactorialSeries& f);
FactorialSeries series_from_json(const Json& j);

Json to_json(const DifferenceEquation& eq);
DifferenceEquation equation_from_json(const Json& j);

Json to_json(const WeylOperator& op);
WeylOperator operator_from_json(const Json& j);

// Series JSON extended with root, indicial polynomial, formal flag and residual.
Json to_json(const FrobeniusSolution& sol);

} // namespace facpoly::io
