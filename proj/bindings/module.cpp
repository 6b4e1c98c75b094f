#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordercalc/format.hpp"
#include "ordercalc/identities.hpp"
#include "ordercalc/orderings.hpp"
#include "ordercalc/parser.hpp"

namespace py = pybind11;
using namespace ordercalc;

namespace {

py::object to_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.str());
}

py::object to_pyint(const BigInt& z) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Rational rational_from_py(const py::object& obj) {
  if (py::isinstance<py::int_>(obj)) return Rational::parse(py::str(obj).cast<std::string>());
  return Rational::parse(py::str(obj).cast<std::string>());
}

Var var_from_name(const std::string& name) {
  if (name == "N") return Var::N;
  if (name == "eps") return Var::Eps;
  if (name == "t") return Var::T;
  throw Error("unknown variable '" + name + "' (expected N, eps, t)");
}

py::dict report_to_dict(const IdentityReport& r) {
  py::dict d;
  d["identity"] = identity_name(r.kind);
  d["n"] = r.n;
  if (r.m) d["m"] = *r.m;
  if (r.i) d["i"] = *r.i;
  if (r.j) d["j"] = *r.j;
  if (r.symbolic_eps) d["symbolic_eps"] = true;
  if (r.trivial) d["trivial"] = true;
  d["holds"] = r.holds;
  d["residual"] = format(r.residual, Style::Text);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact operator-ordering calculus for the boson algebra [a, ad] = eps";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<MPoly>(m, "MPoly")
      .def(py::init<>())
      .def(py::init([](long v) { return MPoly{v}; }))
      .def(py::init([](const std::string& text) { return parse_npoly(text); }))
      .def_static("variable", [](const std::string& name) { return MPoly::variable(var_from_name(name)); })
      .def("is_zero", &MPoly::is_zero)
      .def("is_constant", &MPoly::is_constant)
      .def("constant", [](const MPoly& p) { return to_fraction(p.constant_value()); })
      .def("degree", [](const MPoly& p, const std::string& v) { return p.degree(var_from_name(v)); })
      .def("substitute",
           [](const MPoly& p, const std::string& v, const MPoly& value) {
             return p.substitute(var_from_name(v), value);
           })
      .def("pow", &MPoly::pow)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__add__", [](const MPoly& p, long v) { return p + MPoly{v}; })
      .def("__radd__", [](const MPoly& p, long v) { return MPoly{v} + p; })
      .def("__sub__", [](const MPoly& p, long v) { return p - MPoly{v}; })
      .def("__rsub__", [](const MPoly& p, long v) { return MPoly{v} - p; })
      .def("__mul__", [](const MPoly& p, long v) { return p * Rational(v); })
      .def("__rmul__", [](const MPoly& p, long v) { return p * Rational(v); })
      .def("__pow__", [](const MPoly& p, unsigned k) { return p.pow(k); })
      .def("__str__", [](const MPoly& p) { return format(p, Style::Text); })
      .def("__repr__", [](const MPoly& p) { return "MPoly('" + format(p, Style::Text) + "')"; })
      .def("to_latex", [](const MPoly& p) { return format(p, Style::Latex); })
      .def("to_json", [](const MPoly& p) { return format(p, Style::Json); });

  py::class_<OperatorExpr>(m, "OperatorExpr")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return parse_operator(text); }))
      .def("is_zero", &OperatorExpr::is_zero)
      .def("adjoint", &OperatorExpr::adjoint)
      .def("pow", &OperatorExpr::pow)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def("__mul__", [](const OperatorExpr& e, const MPoly& c) { return e * c; })
      .def("__rmul__", [](const OperatorExpr& e, const MPoly& c) { return c * e; })
      .def("__pow__", [](const OperatorExpr& e, unsigned k) { return e.pow(k); })
      .def("terms",
           [](const OperatorExpr& e) {
             py::list out;
             for (const auto& [w, c] : e.terms()) out.append(py::make_tuple(format_word(w), c));
             return out;
           })
      .def("__str__", [](const OperatorExpr& e) { return format(e, Style::Text); })
      .def("__repr__",
           [](const OperatorExpr& e) { return "OperatorExpr('" + format(e, Style::Text) + "')"; })
      .def("to_latex", [](const OperatorExpr& e) { return format(e, Style::Latex); })
      .def("to_json", [](const OperatorExpr& e) { return format(e, Style::Json); });

  py::class_<NormalForm>(m, "NormalForm")
      .def(py::init<>())
      .def("is_zero", &NormalForm::is_zero)
      .def("coefficient", &NormalForm::coefficient, py::arg("p"), py::arg("q"))
      .def("terms",
           [](const NormalForm& nf) {
             py::list out;
             for (const auto& [pq, c] : nf.terms())
               out.append(py::make_tuple(py::make_tuple(pq.p, pq.q), c));
             return out;
           })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("substitute_eps",
           [](const NormalForm& nf, const MPoly& value) { return substitute_eps(nf, value); })
      .def("__str__", [](const NormalForm& nf) { return format(nf, Style::Text); })
      .def("__repr__",
           [](const NormalForm& nf) { return "NormalForm('" + format(nf, Style::Text) + "')"; })
      .def("to_latex", [](const NormalForm& nf) { return format(nf, Style::Latex); })
      .def("to_json", [](const NormalForm& nf) { return format(nf, Style::Json); });

  py::class_<SymmetricForm>(m, "SymmetricForm")
      .def_readonly("n", &SymmetricForm::n)
      .def("terms",
           [](const SymmetricForm& sf) {
             py::list out;
             for (const auto& [d, c] : sf.terms) out.append(py::make_tuple(d, to_fraction(c)));
             return out;
           })
      .def("expand", &SymmetricForm::expand)
      .def("eval", [](const SymmetricForm& sf, long k) { return to_fraction(sf.eval(k)); })
      .def("__str__", [](const SymmetricForm& sf) { return format(sf, Style::Text); })
      .def("__repr__",
           [](const SymmetricForm& sf) { return "SymmetricForm('" + format(sf, Style::Text) + "')"; })
      .def("to_latex", [](const SymmetricForm& sf) { return format(sf, Style::Latex); })
      .def("to_json", [](const SymmetricForm& sf) { return format(sf, Style::Json); });

  py::class_<SOrderCoeffs>(m, "SOrderCoeffs")
      .def_readonly("order_param", &SOrderCoeffs::order_param)
      .def("terms",
           [](const SOrderCoeffs& sc) {
             py::list out;
             for (const auto& [pq, c] : sc.coeffs)
               out.append(py::make_tuple(py::make_tuple(pq.p, pq.q), c));
             return out;
           })
      .def(py::self == py::self)
      .def("__str__", [](const SOrderCoeffs& sc) { return format(sc, Style::Text); })
      .def("to_latex", [](const SOrderCoeffs& sc) { return format(sc, Style::Latex); })
      .def("to_json", [](const SOrderCoeffs& sc) { return format(sc, Style::Json); });

  py::class_<FactorialBasisExpansion>(m, "FactorialBasisExpansion")
      .def_readonly("increment", &FactorialBasisExpansion::increment)
      .def_readonly("coefficients", &FactorialBasisExpansion::coefficients)
      .def("reconstruct", &FactorialBasisExpansion::reconstruct);

  py::class_<IdentityReport>(m, "IdentityReport")
      .def_property_readonly("identity",
                             [](const IdentityReport& r) { return identity_name(r.kind); })
      .def_readonly("n", &IdentityReport::n)
      .def_readonly("holds", &IdentityReport::holds)
      .def_readonly("trivial", &IdentityReport::trivial)
      .def_readonly("residual", &IdentityReport::residual)
      .def("to_dict", &report_to_dict)
      .def("json_line", &format_report)
      .def("__repr__", &format_report);

  // Parsing and formatting.
  m.def("parse_operator", [](const std::string& t) { return parse_operator(t); });
  m.def("parse_npoly", [](const std::string& t) { return parse_npoly(t); });

  // Difference calculus.
  m.def("falling_factorial", &falling_factorial, py::arg("base"), py::arg("n"));
  m.def("rising_factorial", &rising_factorial, py::arg("base"), py::arg("n"));
  m.def("forward_difference", &forward_difference);
  m.def("newton_expand", &newton_expand);
  m.def("stirling_first",
        [](long n, long i) { return to_pyint(stirling_first(n, i)); }, py::arg("n"), py::arg("i"));
  m.def("stirling_row", [](unsigned n) {
    py::list out;
    for (const auto& v : stirling_row(n)) out.append(to_pyint(v));
    return out;
  });
  m.def("factorial_monomial_convert", [](unsigned n, const std::string& kind) {
    if (kind != "falling" && kind != "rising")
      throw Error("kind must be 'falling' or 'rising'");
    return factorial_monomial_convert(
        n, kind == "falling" ? FactorialKind::Falling : FactorialKind::Rising);
  });

  // Weyl algebra.
  m.def("normalize", [](const OperatorExpr& e) { return normalize(e); });
  m.def("reorder_closed_form", &reorder_closed_form, py::arg("m"), py::arg("n"));
  m.def("brute_force_weyl", &brute_force_weyl, py::arg("n"), py::arg("m"),
        py::arg("cap") = kDefaultWordCap);
  m.def("balanced_to_npoly", &balanced_to_npoly);
  m.def("eval_on_number_state", &eval_on_number_state, py::arg("nf"), py::arg("k"));

  // Orderings.
  m.def("normal_power", &normal_power);
  m.def("antinormal_power", &antinormal_power);
  m.def("weyl_from_normal", &weyl_from_normal, py::arg("n"), py::arg("m"));
  m.def("weyl_from_antinormal", &weyl_from_antinormal, py::arg("n"), py::arg("m"));
  m.def("weyl_antinormal_expansion", &weyl_antinormal_expansion, py::arg("n"), py::arg("m"));
  m.def("weyl_symmetric", &weyl_symmetric);
  m.def("alpha", [](unsigned n, unsigned i) { return to_fraction(alpha(n, i)); }, py::arg("n"),
        py::arg("i"));
  m.def("sorder_from_normal", &sorder_from_normal);
  m.def("s_transform",
        [](const SOrderCoeffs& src, const py::object& target) {
          if (py::isinstance<MPoly>(target)) return s_transform(src, target.cast<MPoly>());
          return s_transform(src, MPoly{rational_from_py(target)});
        },
        py::arg("coeffs"), py::arg("target_s"));

  // Identity verification.
  m.def("verify_noncom", &verify_noncom);
  m.def("verify_derivative_identity", &verify_derivative_identity, py::arg("n"),
        py::arg("symbolic_eps") = false);
  m.def("verify_delta_identity", &verify_delta_identity, py::arg("n"),
        py::arg("symbolic_eps") = false);
  m.def("verify_stirling_relation", &verify_stirling_relation, py::arg("n"), py::arg("j"));
  m.def("verify_general_relation", &verify_general_relation, py::arg("n"), py::arg("m"),
        py::arg("i"));
  m.def("verify_alpha_odd", &verify_alpha_odd);

  m.attr("N") = MPoly::n();
  m.attr("eps") = MPoly::eps();
  m.attr("t") = MPoly::t();
  m.attr("DEFAULT_WORD_CAP") = kDefaultWordCap;
}
