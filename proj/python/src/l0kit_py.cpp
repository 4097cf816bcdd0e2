// Python bindings. Scenarios and reports cross the boundary as JSON text;
// the Python package turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "l0kit/scenario.hpp"

namespace py = pybind11;

namespace {

PyObject* error_type = nullptr;  // l0kit._l0kit.Error, kept for the life of the process

l0kit::Scenario load(const std::string& text, std::optional<std::uint64_t> seed) {
  l0kit::Json doc;
  try {
    doc = l0kit::Json::parse(text);
  } catch (const l0kit::Json::exception& e) {
    throw l0kit::Error(l0kit::Errc::BadValue, std::string("scenario: ") + e.what());
  }
  l0kit::Scenario sc = l0kit::parse_scenario(doc);
  if (seed) sc.seed = *seed;
  return sc;
}

py::tuple result(const l0kit::Outcome& out) {
  return py::make_tuple(out.report.dump(), static_cast<int>(out.exit));
}

std::vector<std::string> dump_all(const std::vector<l0kit::Json>& docs) {
  std::vector<std::string> out;
  for (const auto& d : docs) out.push_back(d.dump());
  return out;
}

}  // namespace

PYBIND11_MODULE(_l0kit, m) {
  m.doc() = "Random normed module fixed-point kernel";

  error_type = PyErr_NewException("l0kit._l0kit.Error", PyExc_RuntimeError, nullptr);
  m.add_object("Error", py::handle(error_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const l0kit::Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(py::str(e.what()));
      inst.attr("code") = py::str(l0kit::errc_name(e.code()));
      inst.attr("atoms") = py::cast(e.atoms());
      inst.attr("exit_code") = static_cast<int>(l0kit::exit_for(e.code()));
      PyErr_SetObject(error_type, inst.ptr());
    }
  });

  m.attr("SCHEMA_VERSION") = l0kit::kSchemaVersion;

  m.def(
      "validate", [](const std::string& text) { load(text, std::nullopt); },
      "Parses a scenario and raises Error on schema problems.", py::arg("scenario_json"));
  m.def(
      "run", [](const std::string& text, std::optional<std::uint64_t> seed) { return result(l0kit::run_scenario(load(text, seed))); },
      "Runs the scenario's solver; returns (report_json, exit_code).", py::arg("scenario_json"),
      py::arg("seed") = py::none());
  m.def(
      "oracle",
      [](const std::string& text, std::optional<std::uint64_t> seed) {
        return result(l0kit::compare_with_oracle(load(text, seed)));
      },
      "Module solver against the per-atom pipeline; returns (report_json, exit_code).", py::arg("scenario_json"),
      py::arg("seed") = py::none());
  m.def(
      "net",
      [](const std::string& text, std::optional<double> eps, std::size_t samples, std::optional<std::uint64_t> seed) {
        return result(l0kit::emit_net(load(text, seed), eps, samples));
      },
      "Builds and samples an epsilon-net; returns (report_json, exit_code).", py::arg("scenario_json"),
      py::arg("eps") = py::none(), py::arg("samples") = 10000, py::arg("seed") = py::none());
  m.def("builtin_suite", [] { return dump_all(l0kit::builtin_suite()); });
  m.def("builtin_contraction_suite", [] { return dump_all(l0kit::builtin_contraction_suite()); });
  m.def("builtin_splitting_suite", [] { return dump_all(l0kit::builtin_splitting_suite()); });
}
