#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tpbound/cli.hpp"
#include "tpbound/conelab.hpp"
#include "tpbound/errors.hpp"
#include "tpbound/factorizer.hpp"
#include "tpbound/polycheck.hpp"
#include "tpbound/tpcore.hpp"

namespace py = pybind11;
using namespace tpbound;

namespace {

py::object fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_string(q));
}

py::list matrix_out(const Matrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(fraction(m(r, c)));
    rows.append(row);
  }
  return rows;
}

// Accepts int, Fraction or "n/d" entries.
Matrix matrix_in(const py::sequence& rows) {
  const std::size_t n = py::len(rows);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    py::sequence row = rows[r];
    if (py::len(row) != n) throw Error(ErrorCode::SizeMismatch, "matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_rational(py::str(row[c]).cast<std::string>());
  }
  return m;
}

Rational rational_in(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

py::dict check(const RatioExpr& r) {
  const St0Result st0 = check_st0(r);
  const ConditionMResult m = check_condition_m(r);
  py::dict out;
  out["st0"] = st0.holds;
  out["st0_index"] = st0.holds ? py::object(py::none()) : py::object(py::int_(st0.index));
  out["condition_m"] = m.holds;
  out["witness"] = m.witness ? py::object(py::cast(m.witness->members())) : py::object(py::none());
  return out;
}

py::dict factor(const RatioExpr& r) {
  const FactorizationResult f = factor_to_basics(r);
  py::list basics;
  for (const auto& b : f.basics) basics.append(b.to_string());
  py::list trace;
  for (const auto& t : f.trace) {
    py::dict rec;
    rec["rule"] = t.rule;
    rec["depth"] = t.depth;
    rec["input"] = t.input.to_string();
    py::list children;
    for (const auto& c : t.children) children.append(c.to_string());
    rec["children"] = children;
    trace.append(rec);
  }
  py::dict out;
  out["basics"] = basics;
  out["trace"] = trace;
  return out;
}

py::dict cone(const RatioExpr& r) {
  const ExponentVector x = ratio_to_vector(r);
  const ConeVerdict v = cone_membership(x, r.rank());
  py::dict out;
  out["verified"] = verify_certificate(x, v, r.rank());
  if (const auto* in = std::get_if<InCone>(&v)) {
    out["in_cone"] = true;
    py::dict coeffs;
    for (const auto& [b, lambda] : in->coefficients) coeffs[py::str(b.to_string())] = fraction(lambda);
    out["coefficients"] = coeffs;
  } else {
    out["in_cone"] = false;
    py::dict cert;
    for (const auto& [s, y] : std::get<Outside>(v).certificate) cert[py::str(s.to_string())] = fraction(y);
    out["certificate"] = cert;
  }
  return out;
}

py::dict subtraction_free(const RatioExpr& r) {
  const Polynomial p = ratio_difference_poly(r);
  const SubtractionFreeResult s = is_subtraction_free(p);
  py::dict out;
  out["free"] = s.free;
  out["terms"] = p.size();
  out["witness"] = s.witness ? py::object(py::str(s.witness->to_string())) : py::object(py::none());
  out["coefficient"] = s.witness ? py::object(py::int_(py::str(s.coefficient.get_str()))) : py::object(py::none());
  return out;
}

py::dict run_falsify(const RatioExpr& r, py::object threshold, py::object t_ladder, int budget, std::uint64_t seed) {
  FalsifyOptions options;
  options.budget = budget;
  options.seed = seed;
  if (!threshold.is_none()) options.threshold = rational_in(threshold);
  if (!t_ladder.is_none()) {
    options.t_ladder.clear();
    for (auto t : t_ladder) options.t_ladder.push_back(rational_in(t));
  }
  const FalsifyOutcome outcome = falsify(r, options);
  py::dict out;
  if (const auto* e = std::get_if<Evidence>(&outcome)) {
    out["verdict"] = "evidence";
    out["method"] = e->method;
    out["description"] = e->description;
    py::list trace;
    for (const auto& p : e->trace) trace.append(py::make_tuple(fraction(p.t), fraction(p.value)));
    out["trace"] = trace;
  } else {
    out["verdict"] = "inconclusive";
    out["reason"] = std::get<Inconclusive>(outcome).reason;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bracket ratios over totally positive matrices";

  static py::exception<Error> error(m, "TpboundError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      std::string msg = std::string(to_string(e.code())) + ": " + e.what();
      PyErr_SetString(error.ptr(), msg.c_str());
    }
  });

  py::class_<RatioExpr>(m, "Ratio")
      .def(py::init([](const std::string& text, std::optional<int> n) { return cli::parse_ratio(text, n); }),
           py::arg("text"), py::arg("n") = py::none())
      .def_property_readonly("rank", &RatioExpr::rank)
      .def_property_readonly("numerator",
                             [](const RatioExpr& r) {
                               std::vector<std::vector<int>> out;
                               for (const auto& s : r.numerator()) out.push_back(s.elements());
                               return out;
                             })
      .def_property_readonly("denominator",
                             [](const RatioExpr& r) {
                               std::vector<std::vector<int>> out;
                               for (const auto& s : r.denominator()) out.push_back(s.elements());
                               return out;
                             })
      .def("shift", [](const RatioExpr& r, int times) { return cyclic_shift(r, times); }, py::arg("times") = 1)
      .def("reverse", [](const RatioExpr& r) { return reversal(r); })
      .def("__str__", &RatioExpr::to_string)
      .def("__repr__", [](const RatioExpr& r) { return "Ratio('" + r.to_string() + "')"; })
      .def(py::self == py::self);

  m.def("check", &check, py::arg("ratio"));
  m.def("factor", &factor, py::arg("ratio"));
  m.def("basics", [](int n) {
    std::vector<std::string> out;
    for (const auto& b : basic_ratios_all(n)) out.push_back(b.to_string());
    return out;
  }, py::arg("n"));
  m.def("basic_count", &basic_ratio_count, py::arg("n"));
  m.def("random_tp", [](int n, std::uint64_t seed, int magnitude) { return matrix_out(random_tp(n, seed, magnitude).entries); },
        py::arg("n"), py::arg("seed") = 1, py::arg("magnitude") = 3);
  m.def("counterexample_matrix", [](py::object t) { return matrix_out(counterexample_matrix(rational_in(t)).entries); },
        py::arg("t"));
  m.def("verify_tp", [](const py::sequence& a) { return verify_tp(matrix_in(a)); }, py::arg("matrix"));
  m.def("evaluate",
        [](const RatioExpr& r, py::object matrix, std::uint64_t seed) {
          const TPMatrix a = matrix.is_none() ? random_tp(r.rank(), seed) : TPMatrix{matrix_in(matrix), std::nullopt};
          return fraction(eval_ratio(a, r));
        },
        py::arg("ratio"), py::arg("matrix") = py::none(), py::arg("seed") = 1);
  m.def("shift_matrix", [](const py::sequence& a) { return matrix_out(shift_matrix(TPMatrix{matrix_in(a), std::nullopt}).entries); },
        py::arg("matrix"));
  m.def("reverse_matrix", [](const py::sequence& a) { return matrix_out(reverse_matrix(TPMatrix{matrix_in(a), std::nullopt}).entries); },
        py::arg("matrix"));
  m.def("cone", &cone, py::arg("ratio"));
  m.def("subtraction_free", &subtraction_free, py::arg("ratio"));
  m.def("falsify", &run_falsify, py::arg("ratio"), py::arg("threshold") = py::none(), py::arg("t_ladder") = py::none(),
        py::arg("budget") = 200, py::arg("seed") = 1);
}
