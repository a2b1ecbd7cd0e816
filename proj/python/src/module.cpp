#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "foliate/commands.hpp"
#include "foliate/gauss.hpp"
#include "foliate/graded.hpp"
#include "foliate/linsys.hpp"
#include "foliate/problem.hpp"
#include "foliate/toric.hpp"

namespace py = pybind11;
using namespace foliate;

namespace {

// Weights arrive as ints, strings or fractions.Fraction; str() covers all three.
Rational to_rational(const py::handle& h) {
  Rational q(py::str(h).cast<std::string>());
  q.canonicalize();
  return q;
}

std::vector<std::vector<Rational>> to_rows(const std::vector<std::vector<py::object>>& rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& w : row) r.push_back(to_rational(w));
    out.push_back(std::move(r));
  }
  return out;
}

struct Resolution {
  GaussState state;
  VariableNames names;

  std::vector<std::string> ideals(const std::vector<FractionalIdeal>& v) const {
    std::vector<std::string> out;
    for (const auto& i : v) out.push_back(i.to_string(names));
    return out;
  }
};

Resolution resolve(const ProblemSpec& spec, std::optional<std::size_t> max_steps, bool audit) {
  IterateOptions opt;
  opt.max_steps = max_steps.value_or(spec.max_steps);
  opt.audit = audit || spec.audit;
  return Resolution{iterate(spec_ideal(spec), spec_ring(spec), opt), spec.variables};
}

py::dict ring_table(const ProblemSpec& spec, std::optional<std::uint32_t> bound, std::optional<std::uint32_t> rows) {
  const KTRingTable t = ktring_enumerate(spec_ring(spec), spec_ideal(spec), bound.value_or(spec.degree_bound));
  py::list leaders;
  for (const auto& e : t.leaders()) leaders.append(py::make_tuple(e.monomial.to_string(spec.variables), e.t_degree));
  py::dict d;
  d["table"] = render_table(t, rows.value_or(spec.table_rows), spec.variables);
  d["leaders"] = leaders;
  d["truncated"] = t.truncated;
  d["determinant_degrees"] = t.determinant_degrees;
  return d;
}

py::tuple run(const std::string& name, const std::vector<std::string>& args, std::optional<std::size_t> max_steps,
              std::optional<std::uint32_t> degree_bound, bool audit, std::optional<std::uint64_t> seed) {
  CommandOptions opt;
  opt.max_steps = max_steps;
  opt.degree_bound = degree_bound;
  opt.audit = audit;
  opt.seed = seed;
  const Report r = run_command(name, args, opt);
  return py::make_tuple(r.exit_code, r.human, r.sidecar());
}

}  // namespace

PYBIND11_MODULE(_foliate, m) {
  m.doc() = "Exact Gauss map iteration for singular foliations";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<ProblemSpec>(m, "Problem")
      .def_static("parse", [](const std::string& text) { return parse_problem(text); }, py::arg("text"))
      .def_static("load", &load_problem, py::arg("path"))
      .def_property_readonly("variables", [](const ProblemSpec& s) { return s.variables; })
      .def_property_readonly("semigroup", [](const ProblemSpec& s) { return s.semigroup; })
      .def_readwrite("max_steps", &ProblemSpec::max_steps)
      .def_readwrite("degree_bound", &ProblemSpec::degree_bound)
      .def_readwrite("table_rows", &ProblemSpec::table_rows)
      .def("__str__", &print_problem)
      .def("__eq__", [](const ProblemSpec& a, const ProblemSpec& b) { return a == b; });

  py::class_<Resolution>(m, "Resolution")
      .def_property_readonly("verdict", [](const Resolution& r) { return to_string(r.state.verdict); })
      .def_property_readonly("t", [](const Resolution& r) { return r.state.t; })
      .def_property_readonly("r", [](const Resolution& r) { return r.state.r; })
      .def_property_readonly("L", [](const Resolution& r) { return r.ideals(r.state.L); })
      .def_property_readonly("J", [](const Resolution& r) { return r.ideals(r.state.J); })
      .def_property_readonly("checks", [](const Resolution& r) { return r.state.stabilization_checks; })
      .def_property_readonly("monomial_path", [](const Resolution& r) { return r.state.monomial_path; })
      .def_property_readonly("resource_exhausted", [](const Resolution& r) { return r.state.resource_exhausted; })
      .def_property_readonly("diagnostics", [](const Resolution& r) { return r.state.diagnostics; })
      .def_property_readonly("toric_certificate",
                             [](const Resolution& r) -> std::optional<std::string> {
                               if (!r.state.toric_certificate) return std::nullopt;
                               return r.state.toric_certificate->explanation;
                             })
      .def_property_readonly("finite_type", [](const Resolution& r) {
        const FiniteTypeVerdict v = finite_type_verdict(r.state, r.names);
        const char* kind = v.kind == FiniteType::finite_type       ? "finite_type"
                           : v.kind == FiniteType::not_finite_type ? "not_finite_type"
                                                                   : "unknown";
        return py::make_tuple(kind, v.evidence);
      });

  m.def("resolve", &resolve, py::arg("problem"), py::arg("max_steps") = py::none(), py::arg("audit") = false,
        "Iterate J_(i+1) = J_i L_i from the problem's ideal and test stabilization.");
  m.def(
      "gauss_map",
      [](const ProblemSpec& spec) { return gauss_map(spec_ideal(spec), spec_ring(spec)).to_string(spec.variables); },
      py::arg("problem"), "F of the problem's ideal.");
  m.def("ring_table", &ring_table, py::arg("problem"), py::arg("bound") = py::none(), py::arg("rows") = py::none());
  m.def(
      "toric_resolvable",
      [](const std::vector<std::vector<py::object>>& rows) {
        const ToricVerdict v = toric_resolvable(WeightSystem(to_rows(rows)));
        return py::make_tuple(v.resolvable, v.explanation);
      },
      py::arg("weights"), "Weights are one row per variable.");
  m.def(
      "w_form",
      [](const std::vector<std::string>& polys, const std::vector<std::string>& variables,
         const std::vector<std::vector<py::object>>& rows) {
        std::vector<Polynomial> fs;
        for (const auto& p : polys) fs.push_back(parse_polynomial(p, variables));
        return w_form(fs, Foliation::diagonal(to_rows(rows))).to_string(variables);
      },
      py::arg("polys"), py::arg("variables"), py::arg("weights"));
  m.def(
      "section_test",
      [](const ProblemSpec& spec) {
        const PolySpan x = span_reduce(spec.nvars(), spec.x_space);
        const PolySpan t = span_reduce(spec.nvars(), spec.t_space);
        const SectionReport r = section_power_test(x, t, spec_foliation(spec));
        return py::make_tuple(to_string(r.outcome), r.power.dimension(), r.nested.dimension());
      },
      py::arg("problem"));

  m.def("base_expansion", [](std::uint64_t i, std::size_t r) { return base_expansion(i, r).digits; }, py::arg("i"),
        py::arg("r"));
  m.def("f_degree", &f_degree, py::arg("d"), py::arg("r"));
  m.def("carrying_identity_holds", &carrying_identity_holds, py::arg("s"), py::arg("r"));
  m.def("divisor_X", [](std::size_t j, std::size_t r) { return divisor_X(j, r).to_string(); }, py::arg("j"),
        py::arg("r"));
  m.def("divisor_recurrence_check", &divisor_recurrence_check, py::arg("i"), py::arg("r"));

  m.def("run_command", &run, py::arg("name"), py::arg("args"), py::arg("max_steps") = py::none(),
        py::arg("degree_bound") = py::none(), py::arg("audit") = false, py::arg("seed") = py::none(),
        "Returns (exit_code, report, sidecar) exactly as the command-line tool would produce them.");
}
