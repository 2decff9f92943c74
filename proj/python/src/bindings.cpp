#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ybsys/cli.hpp"
#include "ybsys/error.hpp"
#include "ybsys/structure_file.hpp"

namespace py = pybind11;
using namespace ybsys;

namespace {

py::list report_to_list(const Report& r) {
  py::list out;
  for (const auto& c : r.checks()) {
    py::dict item;
    item["name"] = c.name;
    item["passed"] = c.holds();
    if (auto w = c.witness()) {
      item["witness"] = py::dict(py::arg("row") = w->row, py::arg("col") = w->col,
                                 py::arg("domain_element") = w->domain_element,
                                 py::arg("codomain_element") = w->codomain_element,
                                 py::arg("difference") = w->value.to_string());
    }
    out.append(item);
  }
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_ybsys, m) {
  m.doc() = "Exact Yang-Baxter systems from entwining structures";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", error.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<DivisionByZero>(m, "DivisionByZero", error.ptr());
  py::register_exception<SingularMap>(m, "SingularMap", error.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error.ptr());

  m.def("simplify", [](const std::string& text) { return ScalarExpr::parse(text).to_string(); }, py::arg("text"),
        "Canonical form of a scalar expression.");

  m.def(
      "list_examples",
      [] {
        py::list out;
        for (const auto& info : list_examples()) {
          py::dict params;
          for (const auto& p : info.params) params[py::str(p.name)] = p.default_value;
          out.append(py::dict(py::arg("name") = info.name, py::arg("kind") = info.kind,
                              py::arg("description") = info.description, py::arg("params") = params));
        }
        return out;
      },
      "Registered examples with their default parameters.");

  m.def(
      "example",
      [](const std::string& name, const std::map<std::string, std::string>& params) {
        auto entry = get_example(name, params);
        return write_structure_file(to_structure_file(entry.payload, name));
      },
      py::arg("name"), py::arg("params") = std::map<std::string, std::string>{},
      "Structure-file JSON of a registered example.");

  m.def(
      "check_algebra",
      [](const std::string& text) {
        auto f = read_structure_file(text);
        if (!f.algebra) throw InvalidArgument("input has no algebra");
        return report_to_list(check_algebra(*f.algebra));
      },
      py::arg("structure_json"));
  m.def(
      "check_coalgebra",
      [](const std::string& text) {
        auto f = read_structure_file(text);
        if (!f.coalgebra) throw InvalidArgument("input has no coalgebra");
        return report_to_list(check_coalgebra(*f.coalgebra));
      },
      py::arg("structure_json"));
  m.def(
      "check_entwining",
      [](const std::string& text) { return report_to_list(check_entwining(entwining_from_file(read_structure_file(text)))); },
      py::arg("structure_json"));
  m.def(
      "check_wxz", [](const std::string& text) { return report_to_list(check_wxz(wxz_from_file(read_structure_file(text)))); },
      py::arg("structure_json"));

  m.def(
      "build_wxz",
      [](const std::string& text, const std::string& r, const std::string& s, const std::string& p,
         const std::string& t) {
        EntwiningStructure e = entwining_from_file(read_structure_file(text));
        WXZSystem sys = wxz_from_entwining(e, ScalarExpr::parse(r), ScalarExpr::parse(s), ScalarExpr::parse(p),
                                           ScalarExpr::parse(t));
        StructureFile f = to_structure_file(sys);
        f.algebra = e.A;
        f.coalgebra = e.C;
        return write_structure_file(f);
      },
      py::arg("structure_json"), py::arg("r") = "r", py::arg("s") = "s", py::arg("p") = "p", py::arg("t") = "t",
      "W, X, Z of an entwining structure, as structure-file JSON.");

  m.def("run_cli", &run_cli, py::arg("args"), py::arg("stdin") = "",
        "Runs one ybsys command; returns (exit_code, stdout, stderr).");
}
