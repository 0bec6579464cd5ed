// Thin bindings: structured results cross the boundary as JSON text and are
// decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clifflab/classify.hpp"
#include "clifflab/serialize.hpp"
#include "clifflab/suites.hpp"

namespace py = pybind11;
using namespace clifflab;

namespace {

std::string repgen(int rank, const std::string& kind, int copies, int minus) {
  if (kind == "full") return dump(rep_to_json(build_clifford_rep(rank, copies)));
  if (kind != "even") throw std::invalid_argument("kind must be 'even' or 'full'");
  return dump(rep_to_json(minus < 0 ? build_even_rep(rank, copies) : build_even_rep(rank, copies, minus)));
}

std::string verify_structure(const std::string& doc, const std::string& suite, std::uint64_t seed) {
  return dump(report_to_json(run_structure_suite(structure_from_json(parse_json_text(doc)), suite, seed)));
}

std::string classify(const std::string& key, const Params& params) {
  return dump(verdict_to_json(check_conditions(candidate(key), params)));
}

std::string table(int t, const std::string& format) {
  if (format == "markdown") return tables_markdown(t);
  if (format == "csv") return tables_csv(t);
  if (format == "json") return dump(table_to_json(t));
  throw std::invalid_argument("format must be markdown, csv or json");
}

std::string product_text(const std::string& a, const std::string& b, int rank) {
  return (element_from_text(a, rank) * element_from_text(b, rank)).str();
}

}  // namespace

PYBIND11_MODULE(_clifflab, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.attr("__version__") = kToolVersion;
  m.def("n0", &n0, py::arg("r"));
  m.def("n_irr", &n_irr, py::arg("r"));
  m.def("max_supported_rank", &max_supported_rank);
  m.def("geometric_product", &product_text, py::arg("a"), py::arg("b"), py::arg("rank"));
  m.def("repgen", &repgen, py::arg("rank"), py::arg("kind") = "even", py::arg("copies") = 1, py::arg("minus") = -1);
  m.def("verify_structure", &verify_structure, py::arg("document"), py::arg("suite"), py::arg("seed") = 0);
  m.def(
      "suites",
      [] {
        std::vector<std::pair<int, std::string>> out;
        for (const auto& s : suite_list()) out.emplace_back(s.id, s.name);
        return out;
      });
  m.def(
      "run_suite", [](int id, std::uint64_t seed) { return dump(report_to_json(run_suite(id, seed))); }, py::arg("id"),
      py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>());
  m.def(
      "verify_all", [](std::uint64_t seed) { return dump(verify_all_json(verify_all(seed), false)); },
      py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>());
  m.def(
      "curvature",
      [](const std::string& model, const std::string& check) { return dump(curvature_check(model, check).document); },
      py::arg("model"), py::arg("check"));
  m.def("classify", &classify, py::arg("candidate"), py::arg("params") = Params{});
  m.def("table", &table, py::arg("table"), py::arg("format") = "markdown");
}
