#include "facpoly/json_io.hpp"

#include "facpoly/errors.hpp"

namespace facpoly::io {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::vector<Rational> rationals_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("expected an array of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(rational_from_json(v));
    return out;
}

Json rationals_to_json(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const auto& q : v) arr.push_back(to_json(q));
    return arr;
}

} // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_unsigned()) return Rational(j.get<unsigned long>());
    if (j.is_number_float()) return parse_rational(j.dump());
    throw ValidationError("expected a rational, got " + j.dump());
}

Json to_json(const Polynomial& p) { return {{"basis", "monomial"}, {"coeffs", rationals_to_json(p.coeffs())}}; }

Polynomial polynomial_from_json(const Json& j) {
    if (j.is_array()) return Polynomial(rationals_from_json(j));
    if (j.is_object()) {
        if (j.contains("basis") && j.at("basis") != "monomial")
            throw ValidationError("expected a monomial-basis polynomial, got basis " + j.at("basis").dump());
        return Polynomial(rationals_from_json(require(j, "coeffs")));
    }
    throw ValidationError("expected a polynomial (array or object), got " + j.dump());
}

Json to_json(const FactorialSeries& f) {
    return {{"basis", "factorial"}, {"coeffs", rationals_to_json(f.coeffs())}, {"exact", f.is_complete()}, {"order", f.order()}};
}

Json to_json(const RealFactorialSeries& f) {
    Json coeffs = Json::array();
    for (Real a : f.coeffs()) coeffs.push_back(static_cast<double>(a));
    return {{"basis", "factorial"}, {"coeffs", coeffs}, {"exact", f.is_complete()}, {"order", f.order()}, {"numeric", "float"}};
}

FactorialSeries series_from_json(const Json& j) {
    if (require(j, "basis") != "factorial") throw ValidationError("expected basis 'factorial'");
    auto coeffs = rationals_from_json(require(j, "coeffs"));
    const Json& exact = require(j, "exact");
    if (!exact.is_boolean()) throw ValidationError("'exact' must be a boolean");
    if (j.contains("order")) {
        const long order = j.at("order").get<long>();
        if (order != static_cast<long>(coeffs.size()) - 1 && !exact.get<bool>())
            throw ValidationError("'order' disagrees with the number of coefficients");
    }
    return {std::move(coeffs), exact.get<bool>() ? Extent::complete : Extent::truncated};
}

Json to_json(const DifferenceEquation& eq) {
    Json terms = Json::array();
    for (const auto& [shift, p] : eq.terms()) terms.push_back({{"shift", shift}, {"poly", rationals_to_json(p.coeffs())}});
    return {{"terms", terms}, {"rhs", rationals_to_json(eq.rhs().coeffs())}};
}

DifferenceEquation equation_from_json(const Json& j) {
    const Json& terms = require(j, "terms");
    if (!terms.is_array()) throw ValidationError("'terms' must be an array");
    DifferenceEquation::Terms out;
    for (const auto& t : terms) {
        const Json& shift = require(t, "shift");
        if (!shift.is_number_integer()) throw ValidationError("'shift' must be an integer");
        auto [it, inserted] = out.emplace(shift.get<int>(), Polynomial(rationals_from_json(require(t, "poly"))));
        if (!inserted) throw ValidationError("duplicate shift " + shift.dump());
    }
    Polynomial rhs;
    if (j.contains("rhs")) rhs = polynomial_from_json(j.at("rhs"));
    return DifferenceEquation(std::move(out), std::move(rhs));
}

Json to_json(const WeylOperator& op) {
    Json terms = Json::array();
    for (const auto& [mono, c] : op.terms())
        terms.push_back({{"m", mono.m_power}, {"p", mono.p_power}, {"coeff", to_json(c)}});
    return {{"terms", terms}, {"text", op.to_string()}};
}

WeylOperator operator_from_json(const Json& j) {
    const Json& terms = require(j, "terms");
    if (!terms.is_array()) throw ValidationError("'terms' must be an array");
    WeylOperator op;
    for (const auto& t : terms)
        op += WeylOperator::term(require(t, "m").get<unsigned>(), require(t, "p").get<unsigned>(), rational_from_json(require(t, "coeff")));
    return op;
}

Json to_json(const FrobeniusSolution& sol) {
    Json out = sol.series ? to_json(*sol.series) : Json{{"basis", "frobenius"}, {"coeffs", rationals_to_json(sol.coeffs)}};
    out["root"] = to_json(sol.root);
    out["indicial"] = rationals_to_json(sol.indicial.coeffs());
    out["formal"] = sol.is_formal();
    out["residual"] = sol.residual ? to_json(*sol.residual) : Json(nullptr);
    return out;
}

} // namespace facpoly::io
