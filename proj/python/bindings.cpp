#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "hilb/cli.hpp"
#include "hilb/errors.hpp"
#include "hilb/hilbcore.hpp"
#include "hilb/parse.hpp"
#include "hilb/symfun.hpp"

namespace py = pybind11;
using namespace hilb;

namespace {

cli::Options options(const std::string& field, std::uint64_t seed, std::size_t budget) {
  cli::Options opt;
  opt.field = Domain::parse(field);
  opt.seed = seed;
  opt.budget = budget;
  return opt;
}

std::string dump(const cli::Report& r) { return r.to_json().dump(); }

std::vector<std::string> ring_vars(const std::vector<std::string>& vars, const std::vector<std::string>& texts) {
  if (!vars.empty()) return vars;
  std::vector<std::string> out;
  for (const auto& t : texts) {
    for (auto& v : scan_variables(t)) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), natural_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string elementary(const std::string& text, std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("t" + std::to_string(i));
  for (auto& v : scan_variables(text)) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(std::move(v));
  }
  return format_poly(to_elementary_basis(SymPoly(parse_poly(text, PolyRing::make(vars)), n)));
}

std::string normal_form_text(const std::string& f, const std::vector<std::string>& gens, std::vector<std::string> vars,
                             const std::string& field) {
  std::vector<std::string> all = gens;
  all.push_back(f);
  auto A = QuotientRing::from_text(ring_vars(vars, all), gens, Domain::parse(field));
  return A->element(parse_poly(f, A->ambient())).to_string();
}

std::optional<unsigned> nilpotency(const std::string& f, const std::vector<std::string>& gens,
                                   std::vector<std::string> vars, const std::string& field) {
  std::vector<std::string> all = gens;
  all.push_back(f);
  auto A = QuotientRing::from_text(ring_vars(vars, all), gens, Domain::parse(field));
  return is_nilpotent(A->element(parse_poly(f, A->ambient())));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact constructions for the punctual Hilbert functor of the line";

  auto base = py::register_exception<Error>(m, "HilbError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<PreconditionViolation>(m, "PreconditionViolation", base.ptr());
  py::register_exception<Unsupported>(m, "Unsupported", base.ptr());
  py::register_exception<VerificationFailure>(m, "VerificationFailure", base.ptr());
  py::register_exception<RingMismatch>(m, "RingMismatch", base.ptr());

  m.def(
      "hnm",
      [](std::size_t n, std::size_t mm, const std::string& field, std::size_t budget) {
        return dump(cli::cmd_hnm(n, mm, options(field, 0, budget)));
      },
      py::arg("n"), py::arg("m"), py::arg("field") = "Q", py::arg("budget") = 1'000'000);
  m.def(
      "minexp",
      [](std::size_t n, std::size_t mm, const std::string& field) {
        return dump(cli::cmd_minexp(n, mm, options(field, 0, 1'000'000)));
      },
      py::arg("n"), py::arg("m"), py::arg("field") = "Q");
  m.def(
      "cofactor",
      [](const std::vector<std::string>& coeffs, const std::vector<std::string>& ideal,
         const std::vector<std::string>& vars, const std::string& field) {
        return dump(cli::cmd_cofactor(ideal, coeffs, vars, options(field, 0, 1'000'000)));
      },
      py::arg("coeffs"), py::arg("ideal") = std::vector<std::string>{}, py::arg("vars") = std::vector<std::string>{},
      py::arg("field") = "Q");
  m.def(
      "witness", [](std::size_t n, std::size_t N) { return dump(cli::cmd_witness(n, N, cli::Options{})); },
      py::arg("n"), py::arg("N"));
  m.def(
      "check",
      [](const std::string& suite, std::uint64_t seed, const std::string& field) {
        return dump(cli::cmd_check(suite, options(field, seed, 1'000'000)));
      },
      py::arg("suite") = "all", py::arg("seed") = 0, py::arg("field") = "Q");
  m.def(
      "enumerate",
      [](std::size_t n, const std::vector<std::string>& ideal, const std::vector<std::string>& vars,
         const std::string& field) { return dump(cli::cmd_enumerate(n, ideal, vars, options(field, 0, 1'000'000))); },
      py::arg("n"), py::arg("ideal") = std::vector<std::string>{"u^2"}, py::arg("vars") = std::vector<std::string>{},
      py::arg("field") = "F2");
  m.def("to_elementary_basis", &elementary, py::arg("poly"), py::arg("n"));
  m.def("normal_form", &normal_form_text, py::arg("poly"), py::arg("ideal"),
        py::arg("vars") = std::vector<std::string>{}, py::arg("field") = "Q");
  m.def("nilpotency_index", &nilpotency, py::arg("poly"), py::arg("ideal"),
        py::arg("vars") = std::vector<std::string>{}, py::arg("field") = "Q");
  m.def(
      "format_poly", [](const std::string& text, const std::string& field) {
        return format_poly(parse_poly(text, Domain::parse(field)));
      },
      py::arg("poly"), py::arg("field") = "Q");
}
