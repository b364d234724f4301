#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "realideal/cli/problem.hpp"
#include "realideal/poly/parse.hpp"
#include "realideal/real/real.hpp"
#include "realideal/sdp/sdp.hpp"

namespace py = pybind11;
using namespace realideal;

namespace {

std::vector<std::string> basis_strings(const Ideal& i, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& g : i.basis()) out.push_back(g.to_string(names));
  return out;
}

py::dict is_real_py(const std::string& text) {
  ProblemFile p = parse_problem(text);
  RealityVerdict v = is_real(p.ideal(), p.hint_ideals());
  py::dict d;
  d["verdict"] = to_string(v.verdict);
  d["certificate"] = to_string(v.certificate);
  d["report"] = report(v, p.vars);
  return d;
}

py::dict check_equality_py(const std::string& text) {
  ProblemFile p = parse_problem(text);
  EqualityVerdict v = check_equality(p.set(), p.ideal(), p.hint_ideals());
  py::dict d;
  d["verdict"] = to_string(v.verdict);
  d["report"] = report(v, p.vars);
  return d;
}

py::dict augment_py(const std::string& text) {
  ProblemFile p = parse_problem(text);
  AugmentTrace t = augment_until_equal(p.set(), p.ideal(), p.hint_ideals());
  py::dict d;
  d["verdict"] = to_string(t.final_verdict.verdict);
  d["rounds"] = t.rounds.size();
  d["generators"] = basis_strings(t.result, p.vars);
  d["report"] = report(t, p.vars);
  return d;
}

py::dict solve_py(const std::string& text, int k, double tol) {
  Pop pop = parse_problem(text).pop();
  SolveResult s = solve_relaxation(pop, k, tol);
  py::dict d;
  d["status"] = to_string(s.status);
  d["primal"] = s.primal;
  d["dual"] = s.dual;
  d["iterations"] = s.iterations;
  d["moments"] = s.moments;
  d["gram_residual"] = s.gram_residual;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Real vanishing ideals, augmentation and moment relaxations";

  // translators run newest first, so the most derived type goes last
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("render", [](const std::string& text) { return render(parse_problem(text)); },
        "Canonical text of a problem file.", py::arg("text"));
  m.def("is_real", &is_real_py, "Decide whether I(V(I)) = I for the equations of a problem file.", py::arg("text"));
  m.def("check_equality", &check_equality_py, "Decide whether I(S ∩ V(I)) = I.", py::arg("text"));
  m.def("augment", &augment_py, "Enlarge I until equality holds.", py::arg("text"));
  m.def("base_order", [](const std::string& text) { return base_order(parse_problem(text).pop()); }, py::arg("text"));
  m.def("solve", &solve_py, "Solve the order-k relaxation pair.", py::arg("text"), py::arg("k"),
        py::arg("tol") = kDefaultTolerance);
  m.def("sdpa", [](const std::string& text, int k) { return to_sdpa(build_primal(parse_problem(text).pop(), k)); },
        "SDPA sparse text of the order-k moment relaxation.", py::arg("text"), py::arg("k"));
}
