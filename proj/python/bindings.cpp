#include "facpoly/difference_equation.hpp"
#include "facpoly/difference_solvers.hpp"
#include "facpoly/errors.hpp"
#include "facpoly/factorial.hpp"
#include "facpoly/factorial_series.hpp"
#include "facpoly/frobenius.hpp"
#include "facpoly/special_series.hpp"
#include "facpoly/weyl_operator.hpp"

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

// Rational <-> fractions.Fraction. Accepts int, Fraction, or a "p/q" / decimal string.
namespace pybind11::detail {
template <>
struct type_caster<facpoly::Rational> {
    PYBIND11_TYPE_CASTER(facpoly::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool convert) {
        if (!src) return false;
        const bool exact = py::isinstance<py::int_>(src) || py::isinstance(src, fraction_type());
        if (!exact && !(convert && py::isinstance<py::str>(src))) return false;
        try {
            if (py::isinstance(src, fraction_type())) {
                value = facpoly::parse_rational(py::str(src.attr("numerator")).cast<std::string>() + "/" +
                                                py::str(src.attr("denominator")).cast<std::string>());
            } else {
                value = facpoly::parse_rational(py::str(src).cast<std::string>());
            }
        } catch (const facpoly::Error&) {
            return false;
        }
        return true;
    }

    static handle cast(const facpoly::Rational& q, return_value_policy, handle) {
        return fraction_type()(facpoly::to_string(q)).release();
    }

private:
    static py::object fraction_type() { return py::module_::import("fractions").attr("Fraction"); }
};
} // namespace pybind11::detail

using namespace facpoly;

namespace {


template <typename T>
void bind_series(py::module_& m, const char* name) {
    using S = BasicFactorialSeries<T>;
    py::class_<S>(m, name)
        .def(py::init<>())
        .def_static("complete", &S::complete, py::arg("coeffs"))
        .def_static("truncated", &S::truncated, py::arg("coeffs"))
        .def_static("basis", &S::basis, py::arg("n"))
        .def_property_readonly("coeffs", &S::coeffs)
        .def_property_readonly("is_complete", &S::is_complete)
        .def_property_readonly("order", &S::order)
        .def("coeff", &S::coeff, py::arg("n"))
        .def("truncate", &S::truncate, py::arg("k"))
        .def("at", [](const S& f, unsigned long m) { return eval_at_integer(f, m); }, py::arg("m"))
        .def("at_real", [](const S& f, double x, long order) {
                 const auto r = eval_at_real(f, x, order);
                 return py::make_tuple(r.value, r.remainder);
             }, py::arg("x"), py::arg("order"))
        .def("apply_M", [](const S& f) { return apply_M(f); })
        .def("apply_P", [](const S& f) { return apply_P(f); })
        .def("apply_x", [](const S& f) { return apply_x(f); })
        .def("apply_shift", [](const S& f) { return apply_shift(f); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self == py::self)
        .def("__repr__", [name](const S& f) {
            return std::string(name) + "(order=" + std::to_string(f.order()) + (f.is_complete() ? ", complete)" : ", truncated)");
        });
}

} // namespace

PYBIND11_MODULE(_facpoly, m) {
    m.doc() = "Factorial series, the M/P operator algebra and difference-equation solvers.";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<ValidationError>(m, "ValidationError", error);
    py::register_exception<PoleError>(m, "PoleError", error);
    py::register_exception<OrderError>(m, "OrderError", error);
    py::register_exception<ResonanceError>(m, "ResonanceError", error);
    py::register_exception<NotARootError>(m, "NotARootError", error);
    py::register_exception<DivergentResolventError>(m, "DivergentResolventError", error);

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<>())
        .def(py::init<std::vector<Rational>>(), py::arg("coeffs"))
        .def_property_readonly("coeffs", &Polynomial::coeffs)
        .def_property_readonly("degree", &Polynomial::degree)
        .def("__call__", py::overload_cast<const Rational&>(&Polynomial::operator(), py::const_))
        .def("derivative", &Polynomial::derivative, py::arg("times") = 1)
        .def("translate", &Polynomial::translate)
        .def("forward_difference", &Polynomial::forward_difference)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self * Rational())
        .def(py::self == py::self)
        .def("to_string", &Polynomial::to_string, py::arg("var") = "x")
        .def("__str__", [](const Polynomial& p) { return p.to_string(); })
        .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + p.to_string() + ")"; });

    bind_series<Rational>(m, "FactorialSeries");
    bind_series<Real>(m, "RealFactorialSeries");
    m.def("to_real", py::overload_cast<const FactorialSeries&>(&to_real));

    py::class_<WeylOperator>(m, "WeylOperator")
        .def(py::init<>())
        .def_static("identity", &WeylOperator::identity)
        .def_static("constant", &WeylOperator::constant)
        .def_static("term", &WeylOperator::term, py::arg("m_power"), py::arg("p_power"), py::arg("coeff") = Rational(1))
        .def_static("M", &WeylOperator::M)
        .def_static("P", &WeylOperator::P)
        .def_static("X", &WeylOperator::X)
        .def_static("shift", &WeylOperator::shift)
        .def_property_readonly("terms", [](const WeylOperator& op) {
            std::map<std::pair<unsigned, unsigned>, Rational> out;
            for (const auto& [mono, c] : op.terms()) out[{mono.m_power, mono.p_power}] = c;
            return out;
        })
        .def("coeff", &WeylOperator::coeff)
        .def("pow", &WeylOperator::pow)
        .def("__pow__", &WeylOperator::pow)
        .def("__call__", [](const WeylOperator& op, const FactorialSeries& f) { return apply_to_series(op, f); })
        .def("__call__", [](const WeylOperator& op, const RealFactorialSeries& f) { return apply_to_series(op, f); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self * py::self)
        .def(py::self * Rational())
        .def(Rational() * py::self)
        .def(py::self == py::self)
        .def("__str__", &WeylOperator::to_string)
        .def("__repr__", [](const WeylOperator& op) { return "WeylOperator(" + op.to_string() + ")"; });
    m.def("commutator", &commutator);
    m.def("substitute", &substitute, py::arg("p"), py::arg("arg"));

    py::class_<DifferenceEquation>(m, "DifferenceEquation")
        .def(py::init<DifferenceEquation::Terms, Polynomial>(), py::arg("terms"), py::arg("rhs") = Polynomial())
        .def_property_readonly("terms", &DifferenceEquation::terms)
        .def_property_readonly("rhs", &DifferenceEquation::rhs)
        .def_property_readonly("min_shift", &DifferenceEquation::min_shift)
        .def_property_readonly("max_shift", &DifferenceEquation::max_shift)
        .def("translated", &DifferenceEquation::translated)
        .def(py::self == py::self)
        .def("__str__", &DifferenceEquation::to_string);

    py::class_<OperatorForm>(m, "OperatorForm")
        .def_readonly("op", &OperatorForm::op)
        .def_readonly("shift", &OperatorForm::shift)
        .def_readonly("absorbed", &OperatorForm::absorbed);
    m.def("from_difference_equation", &from_difference_equation);
    m.def("to_difference_equation", &to_difference_equation);

    m.def("falling_factorial", [](const Rational& x, unsigned n) { return falling_factorial(x, n); }, py::arg("x"), py::arg("n"));
    m.def("falling_factorial_real", &falling_factorial_real, py::arg("x"), py::arg("nu"));
    m.def("monomial_to_factorial", &monomial_to_factorial);
    m.def("factorial_to_monomial", &factorial_to_monomial);

    m.def("exp_series", py::overload_cast<const Rational&, unsigned>(&exp_series), py::arg("lam"), py::arg("order"));
    m.def("exp_series_real", [](double lam, unsigned order) { return exp_series(static_cast<Real>(lam), order); },
          py::arg("lam"), py::arg("order"));
    m.def("cos_series", [](unsigned order) { return trig_series(TrigKind::cosine, order); }, py::arg("order"));
    m.def("sin_series", [](unsigned order) { return trig_series(TrigKind::sine, order); }, py::arg("order"));
    m.def("bessel_series", &bessel_series, py::arg("n"), py::arg("order"));
    m.def("bessel_operator", &bessel_operator, py::arg("n"));
    m.def("bessel_difference_equation", &bessel_difference_equation, py::arg("n"));

    py::class_<FrobeniusSolution>(m, "FrobeniusSolution")
        .def_readonly("root", &FrobeniusSolution::root)
        .def_readonly("coeffs", &FrobeniusSolution::coeffs)
        .def_readonly("indicial", &FrobeniusSolution::indicial)
        .def_readonly("series", &FrobeniusSolution::series)
        .def_property_readonly("is_formal", &FrobeniusSolution::is_formal);
    m.def("indicial_polynomial", &indicial_polynomial);
    m.def("rational_roots", &rational_roots);
    m.def("irrational_roots", &irrational_roots);
    m.def("solve_series", &solve_series, py::arg("op"), py::arg("root"), py::arg("order"));
    m.def("residual", [](const DifferenceEquation& eq, const FactorialSeries& f, const std::vector<long>& points) {
        return residual(eq, f, points);
    });

    m.def("heat_propagate", &heat_propagate, py::arg("w"), py::arg("m"));
    m.def("particular_solution", &particular_solution, py::arg("a"), py::arg("b"), py::arg("g"));
    m.def("particular_solution_resolvent", &particular_solution_resolvent, py::arg("a"), py::arg("b"), py::arg("g"));
    m.def("nonhomogeneous_general", [](const Rational& a, const Rational& b, const Polynomial& g, const std::vector<long>& points) {
        const auto r = nonhomogeneous_general(a, b, g, points);
        return py::make_tuple(r.particular, r.homogeneous_base, r.residual);
    }, py::arg("a"), py::arg("b"), py::arg("g"), py::arg("points"));
}
