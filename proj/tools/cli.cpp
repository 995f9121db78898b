#include "cli.hpp"

#include "facpoly/difference_equation.hpp"
#include "facpoly/difference_solvers.hpp"
#include "facpoly/errors.hpp"
#include "facpoly/factorial.hpp"
#include "facpoly/frobenius.hpp"
#include "facpoly/json_io.hpp"
#include "facpoly/oracles.hpp"
#include "facpoly/special_series.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

namespace facpoly::cli {

namespace {

using io::Json;

// Raised when an oracle or residual check disagrees; maps to exit code 3.
struct VerificationFailure {
    Json report;
};

std::string format_double(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\n\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\n\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

// "0..5", "1,2,7", "0..3,10" or decimals such as "2.5"; ranges are inclusive.
std::vector<Rational> parse_points(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& part : split(text, ',')) {
        if (part.empty()) continue;
        if (auto dots = part.find(".."); dots != std::string::npos) {
            const Rational lo = parse_rational(part.substr(0, dots));
            const Rational hi = parse_rational(part.substr(dots + 2));
            if (!is_integer(lo) || !is_integer(hi)) throw ValidationError("range bounds must be integers: '" + part + "'");
            for (long m = lo.get_num().get_si(); m <= hi.get_num().get_si(); ++m) out.emplace_back(m);
        } else {
            out.push_back(parse_rational(part));
        }
    }
    if (out.empty()) throw ValidationError("empty point list '" + text + "'");
    return out;
}

std::vector<long> integer_points(const std::vector<Rational>& points) {
    std::vector<long> out;
    for (const auto& q : points) {
        if (!is_integer(q)) throw ValidationError("expected integer points, got " + to_string(q));
        out.push_back(q.get_num().get_si());
    }
    return out;
}

// A file path, inline JSON, or (for polynomials) a comma-separated list.
Json load_json_argument(const std::string& arg) {
    std::string text = arg;
    std::error_code ec;
    if (!arg.empty() && arg.front() != '{' && arg.front() != '[' && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError("cannot parse JSON input: " + std::string(e.what()));
    }
}

Polynomial load_polynomial(const std::string& arg) {
    const std::string t = trim(arg);
    std::error_code ec;
    if (!t.empty() && t.front() != '{' && t.front() != '[' && !std::filesystem::is_regular_file(t, ec)) {
        std::vector<Rational> coeffs;
        for (const auto& part : split(t, ',')) coeffs.push_back(parse_rational(part));
        return Polynomial(std::move(coeffs));
    }
    return io::polynomial_from_json(load_json_argument(t));
}

Json polynomial_output(const Polynomial& p, bool as_float) {
    Json j = io::to_json(p);
    if (as_float) {
        Json coeffs = Json::array();
        for (const auto& c : p.coeffs()) coeffs.push_back(c.get_d());
        j["coeffs"] = coeffs;
        j["numeric"] = "float";
    }
    j["text"] = p.to_string();
    return j;
}

Json rational_output(const Rational& q, bool as_float) { return as_float ? Json(q.get_d()) : io::to_json(q); }

// ---------------------------------------------------------------- eval-phi

struct EvalPhiOptions {
    std::string x;
    std::optional<unsigned> n;
    std::optional<double> nu;
    bool as_float = false;
    bool json = false;
};

void cmd_eval_phi(const EvalPhiOptions& o, std::ostream& out) {
    if (o.n.has_value() == o.nu.has_value()) throw ValidationError("eval-phi needs exactly one of --n or --nu");
    std::string value;
    if (o.n) {
        const Rational v = falling_factorial(parse_rational(o.x), *o.n);
        value = o.as_float ? format_double(v.get_d(), 17) : to_string(v);
    } else {
        value = format_double(falling_factorial_real(parse_rational(o.x).get_d(), *o.nu));
    }
    if (o.json) {
        Json j{{"x", o.x}, {"value", value}};
        if (o.n) j["n"] = *o.n;
        if (o.nu) j["nu"] = *o.nu;
        out << j.dump(2) << "\n";
    } else {
        out << value << "\n";
    }
}

// ------------------------------------------------------------------ series

struct SeriesOptions {
    std::string kind;
    std::string lambda = "1";
    int n = 0;
    std::string points = "0..10";
    std::optional<unsigned> order;
    bool as_float = false;
    bool json = false;
};

void cmd_series(const SeriesOptions& o, std::ostream& out) {
    const auto points = parse_points(o.points);
    bool all_integer = true;
    Rational top = 0;
    for (const auto& p : points) {
        if (p < 0) throw ValidationError("series points must be non-negative");
        all_integer = all_integer && is_integer(p);
        top = std::max(top, p);
    }
    if (!all_integer && !o.order)
        throw ValidationError(o.kind == "bessel"
                                  ? "Bessel series are evaluated only at non-negative integers (the factorial series appears "
                                    "divergent elsewhere); pass --order to force a truncated sum"
                                  : "non-integer points need an explicit truncation --order");

    const unsigned needed = static_cast<unsigned>(mpz_class(top.get_num() / top.get_den()).get_ui());
    const unsigned order = o.order ? *o.order : needed + (o.kind == "bessel" ? static_cast<unsigned>(std::abs(o.n)) : 0);

    FactorialSeries series;
    if (o.kind == "exp")
        series = exp_series(parse_rational(o.lambda), order);
    else if (o.kind == "cos")
        series = trig_series(TrigKind::cosine, order);
    else if (o.kind == "sin")
        series = trig_series(TrigKind::sine, order);
    else if (o.kind == "bessel")
        series = bessel_series(o.n, std::max(order, static_cast<unsigned>(std::abs(o.n))));
    else
        throw ValidationError("unknown series kind '" + o.kind + "'");

    Json rows = Json::array();
    for (const auto& p : points) {
        Json row{{"x", to_string(p)}};
        if (is_integer(p)) {
            const Rational v = eval_at_integer(series, p.get_num().get_ui());
            row["value"] = o.as_float ? format_double(v.get_d(), 17) : to_string(v);
            row["remainder"] = "0";
        } else {
            const auto r = eval_at_real(series, p.get_d(), series.order());
            row["value"] = format_double(r.value, 17);
            row["remainder"] = format_double(r.remainder, 6);
        }
        rows.push_back(row);
    }

    if (o.json) {
        out << Json{{"kind", o.kind}, {"series", io::to_json(series)}, {"rows", rows}}.dump(2) << "\n";
        return;
    }
    out << "x,value,remainder\n";
    for (const auto& row : rows)
        out << row["x"].get<std::string>() << "," << row["value"].get<std::string>() << "," << row["remainder"].get<std::string>() << "\n";
}

// ------------------------------------------------------------------- solve

struct SolveOptions {
    std::string input;
    unsigned order = 12;
    std::optional<std::string> points;
    bool verify = false;
};

void cmd_solve(const SolveOptions& o, std::ostream& out) {
    Json input = load_json_argument(o.input);
    // Accept a previous solve report as input.
    if (input.is_object() && input.contains("equation")) input = input.at("equation");
    const DifferenceEquation eq = io::equation_from_json(input);
    const OperatorForm form = from_difference_equation(eq);
    const Polynomial indicial = indicial_polynomial(form.op);

    std::vector<long> points;
    if (o.points) {
        points = integer_points(parse_points(*o.points));
    } else {
        for (long m = form.shift; m <= form.shift + 10; ++m) points.push_back(m);
    }
    const long top_point = points.empty() ? 0 : *std::max_element(points.begin(), points.end());
    const long needed_index = top_point + std::max(0, eq.max_shift());

    Json report;
    report["equation"] = io::to_json(eq);
    report["operator"] = io::to_json(form.op);
    report["shift"] = form.shift;
    report["absorbed"] = form.absorbed;
    report["indicial"] = io::to_json(indicial)["coeffs"];
    report["indicial_text"] = indicial.to_string("c");

    const auto roots = rational_roots(indicial);
    Json roots_json = Json::array();
    for (const auto& r : roots) roots_json.push_back(io::to_json(r));
    report["roots"] = roots_json;
    Json numeric = Json::array();
    for (const auto& z : irrational_roots(indicial)) numeric.push_back({{"re", z.real()}, {"im", z.imag()}});
    report["numeric_roots"] = numeric;

    Json solutions = Json::array();
    Json failures = Json::array();
    bool verified_any = false;
    for (const auto& root : roots) {
        try {
            unsigned order = o.order;
            if (is_integer(root) && root >= 0) {
                const long c = root.get_num().get_si();
                order = std::max<long>(order, needed_index - c);
            }
            FrobeniusSolution sol = solve_series(form.op, root, order);
            if (sol.series) {
                sol.residual = residual(eq, *sol.series, points);
                verified_any = verified_any || *sol.residual == 0;
            }
            Json s = io::to_json(sol);
            s["verified"] = sol.residual && *sol.residual == 0;
            solutions.push_back(s);
        } catch (const ResonanceError& e) {
            failures.push_back({{"root", io::to_json(root)}, {"error", e.what()}, {"k", e.k()}});
        } catch (const OrderError& e) {
            failures.push_back({{"root", io::to_json(root)}, {"error", e.what()}});
        }
    }
    report["solutions"] = solutions;
    report["failures"] = failures;
    Json points_json = points;
    report["points"] = points_json;
    report["verified"] = verified_any;

    bool ok = verified_any;
    if (o.verify) {
        const bool round_trip = to_difference_equation(form.op) == eq.translated(form.shift);
        report["round_trip"] = round_trip;
        ok = ok && round_trip;
    }
    if (!ok) throw VerificationFailure{report};
    out << report.dump(2) << "\n";
}

// -------------------------------------------------------------------- heat

struct HeatOptions {
    std::string w;
    unsigned m = 0;
    bool verify = false;
    bool as_float = false;
};

void cmd_heat(const HeatOptions& o, std::ostream& out) {
    const Polynomial w = load_polynomial(o.w);
    const Polynomial result = heat_propagate(w, o.m);
    Json report = polynomial_output(result, o.as_float);
    report["m"] = o.m;
    if (o.verify) {
        const bool agree = heat_step_oracle(w, o.m) == result;
        report["verified"] = agree;
        if (!agree) throw VerificationFailure{report};
    }
    out << report.dump(2) << "\n";
}

// ----------------------------------------------------------------- nonhomo

struct NonhomoOptions {
    std::string a;
    std::string b;
    std::string g;
    std::string points = "0..10";
    bool verify = false;
    bool as_float = false;
};

void cmd_nonhomo(const NonhomoOptions& o, std::ostream& out) {
    const Rational a = parse_rational(o.a);
    const Rational b = parse_rational(o.b);
    const Polynomial g = load_polynomial(o.g);
    const auto points = integer_points(parse_points(o.points));
    const auto result = nonhomogeneous_general(a, b, g, points);

    Json report;
    report["a"] = io::to_json(a);
    report["b"] = io::to_json(b);
    report["g"] = io::to_json(g)["coeffs"];
    report["y_p"] = polynomial_output(result.particular, o.as_float)["coeffs"];
    report["y_p_text"] = result.particular.to_string();
    report["homogeneous_base"] = result.homogeneous_base ? rational_output(*result.homogeneous_base, o.as_float) : Json(nullptr);
    report["residual"] = io::to_json(result.residual);

    bool ok = result.residual == 0;
    if (o.verify) {
        const auto oracle = oracle::undetermined_coefficients(a, b, g);
        const bool oracle_agrees = oracle && *oracle == result.particular;
        const bool resolvent_agrees = particular_solution_resolvent(a, b, g) == result.particular;
        report["oracle_agrees"] = oracle_agrees;
        report["resolvent_agrees"] = resolvent_agrees;
        ok = ok && oracle_agrees && resolvent_agrees;
    }
    report["verified"] = ok;
    if (!ok) throw VerificationFailure{report};
    out << report.dump(2) << "\n";
}

// ----------------------------------------------------------- verify-bessel

struct BesselOptions {
    int n = 1;
    std::string points = "2..15";
};

void cmd_verify_bessel(const BesselOptions& o, std::ostream& out) {
    const auto points = integer_points(parse_points(o.points));
    const auto rec = verify_bessel_recurrences(o.n, points);
    std::vector<long> eq_points;
    std::copy_if(points.begin(), points.end(), std::back_inserter(eq_points), [](long m) { return m >= 2; });
    const auto deq = verify_bessel_difference_equation(o.n, eq_points);

    Json report;
    report["n"] = o.n;
    Json points_json = points;
    report["points"] = points_json;
    report["shift_recurrence_residual"] = io::to_json(rec.shift_residual);
    report["ladder_recurrence_residual"] = io::to_json(rec.ladder_residual);
    report["difference_equation_residual"] = io::to_json(deq.max_residual);
    report["operator"] = bessel_operator(o.n).to_string();
    report["equation"] = io::to_json(to_difference_equation(bessel_operator(o.n)));
    report["structure_matches"] = deq.structure_matches;
    const bool ok = rec.shift_residual == 0 && rec.ladder_residual == 0 && deq.max_residual == 0 && deq.structure_matches;
    report["verified"] = ok;
    if (!ok) throw VerificationFailure{report};
    out << report.dump(2) << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Operational calculus of factorial polynomials"};
    app.require_subcommand(1);

    EvalPhiOptions phi;
    auto* eval_phi = app.add_subcommand("eval-phi", "Falling factorial phi_n(x), or the gamma ratio for real nu");
    eval_phi->add_option("--x", phi.x, "Argument (rational 'p/q' or decimal)")->required();
    eval_phi->add_option("--n", phi.n, "Non-negative integer index (exact product form)");
    eval_phi->add_option("--nu", phi.nu, "Real index (gamma ratio)");
    eval_phi->add_flag("--float", phi.as_float, "Print floating point instead of an exact rational");
    eval_phi->add_flag("--json", phi.json, "JSON output");

    SeriesOptions series;
    auto* series_cmd = app.add_subcommand("series", "Tabulate exp, cos, sin or bessel factorial series");
    series_cmd->add_option("kind", series.kind, "exp | cos | sin | bessel")
        ->required()
        ->check(CLI::IsMember({"exp", "cos", "sin", "bessel"}));
    series_cmd->add_option("--lambda", series.lambda, "Eigenvalue of the umbral exponential");
    series_cmd->add_option("--n", series.n, "Bessel index");
    series_cmd->add_option("--points", series.points, "Points, e.g. 0..5 or 0,1,2.5");
    series_cmd->add_option("--order", series.order, "Truncation order override");
    series_cmd->add_flag("--float", series.as_float, "Print floating point values");
    auto* series_json = series_cmd->add_flag("--json", series.json, "JSON output");
    series_cmd->add_flag("--csv", "CSV output (default)")->excludes(series_json);

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Frobenius solution of a homogeneous difference equation");
    solve_cmd->add_option("equation", solve.input, "Equation JSON: file path or inline")->required();
    solve_cmd->add_option("--order", solve.order, "Number of Frobenius coefficients beyond a_0");
    solve_cmd->add_option("--points", solve.points, "Residual check points (default s..s+10)");
    solve_cmd->add_flag("--verify", solve.verify, "Also check the operator round trip");
    solve_cmd->add_flag("--json", "JSON output (always on)");

    HeatOptions heat;
    auto* heat_cmd = app.add_subcommand("heat", "Discrete-time heat propagator on polynomial data");
    heat_cmd->add_option("--w", heat.w, "Initial polynomial: 'c0,c1,...', JSON, or file")->required();
    heat_cmd->add_option("--m", heat.m, "Number of unit time steps")->required();
    heat_cmd->add_flag("--verify", heat.verify, "Cross-check against explicit stepping");
    heat_cmd->add_flag("--float", heat.as_float, "Print floating point coefficients");
    heat_cmd->add_flag("--json", "JSON output (always on)");

    NonhomoOptions nonhomo;
    auto* nonhomo_cmd = app.add_subcommand("nonhomo", "Particular solution of a y(x+1) + b y(x) = g(x)");
    nonhomo_cmd->add_option("--a", nonhomo.a, "Coefficient a")->required();
    nonhomo_cmd->add_option("--b", nonhomo.b, "Coefficient b")->required();
    nonhomo_cmd->add_option("--g", nonhomo.g, "Right-hand side polynomial")->required();
    nonhomo_cmd->add_option("--points", nonhomo.points, "Residual check points");
    nonhomo_cmd->add_flag("--verify", nonhomo.verify, "Cross-check against undetermined coefficients and the resolvent route");
    nonhomo_cmd->add_flag("--float", nonhomo.as_float, "Print floating point coefficients");
    nonhomo_cmd->add_flag("--json", "JSON output (always on)");

    BesselOptions bessel;
    auto* bessel_cmd = app.add_subcommand("verify-bessel", "Exact checks of the Bessel-type recurrences and difference equation");
    bessel_cmd->add_option("--n", bessel.n, "Bessel index");
    bessel_cmd->add_option("--points", bessel.points, "Integer points");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? success : validation_error;
    }

    try {
        if (*eval_phi) cmd_eval_phi(phi, out);
        if (*series_cmd) cmd_series(series, out);
        if (*solve_cmd) cmd_solve(solve, out);
        if (*heat_cmd) cmd_heat(heat, out);
        if (*nonhomo_cmd) cmd_nonhomo(nonhomo, out);
        if (*bessel_cmd) cmd_verify_bessel(bessel, out);
    } catch (const VerificationFailure& f) {
        out << f.report.dump(2) << "\n";
        err << "error: verification failed\n";
        return verification_failure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return validation_error;
    } catch (const Json::exception& e) {
        err << "error: malformed JSON input: " << e.what() << "\n";
        return validation_error;
    }
    return success;
}

} // namespace facpoly::cli
