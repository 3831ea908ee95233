#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "matchless/cli.hpp"
#include "matchless/constructions.hpp"
#include "matchless/errors.hpp"
#include "matchless/formulas.hpp"
#include "matchless/matchings.hpp"
#include "matchless/oracle.hpp"
#include "matchless/report.hpp"
#include "matchless/shifting.hpp"

namespace py = pybind11;
using namespace matchless;

namespace {

py::int_ to_py(const Count& c) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(c).c_str(), nullptr, 10));
}

py::object to_py(const Ratio& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(Count(numerator(r))), to_py(Count(denominator(r))));
}

py::dict to_py(const Verdict& v) {
  py::dict d;
  d["holds"] = v.holds;
  d["lhs"] = to_py(v.lhs);
  d["rhs"] = to_py(v.rhs);
  d["margin"] = to_py(v.margin);
  d["regime_note"] = v.regime_note ? py::object(py::str(*v.regime_note)) : py::object(py::none());
  return d;
}

SubsetWord to_subset(std::size_t n, const std::vector<std::size_t>& elements) {
  return SubsetWord::from_elements(n, elements);
}

py::dict to_py(const OracleResult& r) {
  py::dict d;
  d["value"] = to_py(r.value);
  d["witness"] = r.witness;
  d["nodes"] = r.nodes;
  d["elapsed_ms"] = r.elapsed_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Set families with bounded matching number";
  m.attr("__version__") = kToolVersion;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
  py::register_exception<OutOfRegime>(m, "OutOfRegime", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<Family>(m, "Family")
      .def(py::init([](std::size_t n, const std::vector<std::vector<std::size_t>>& sets) {
             std::vector<SubsetWord> members;
             for (const auto& s : sets) members.push_back(to_subset(n, s));
             return Family(n, std::move(members));
           }),
           py::arg("n"), py::arg("sets") = std::vector<std::vector<std::size_t>>{})
      .def_property_readonly("n", &Family::ground_size)
      .def_property_readonly("sets",
                             [](const Family& f) {
                               std::vector<std::vector<std::size_t>> out;
                               for (const auto& s : f) out.push_back(s.elements());
                               return out;
                             })
      .def("__len__", &Family::size)
      .def("__contains__",
           [](const Family& f, const std::vector<std::size_t>& s) { return f.contains(to_subset(f.ground_size(), s)); })
      .def("__eq__", [](const Family& a, const Family& b) { return a == b; })
      .def("to_text", &serialize_family)
      .def("__repr__", [](const Family& f) {
        std::ostringstream os;
        os << "<Family n=" << f.ground_size() << " size=" << f.size() << ">";
        return os.str();
      });

  m.def("parse_family", [](const std::string& text) { return parse_family(text); }, py::arg("text"));
  m.def("layer", &layer, py::arg("family"), py::arg("k"));
  m.def("construct", [](const std::string& spec) { return build(parse_construction_spec(spec)); }, py::arg("spec"),
        "Build a family from a spec such as 'P m=1 s=4 l=2'.");
  m.def("closed_form_size", [](const std::string& spec) { return to_py(closed_form_size(parse_construction_spec(spec))); },
        py::arg("spec"));

  m.def(
      "nu",
      [](const Family& f) {
        const NuResult r = nu(f);
        std::vector<std::vector<std::size_t>> witness;
        for (const auto& s : r.witness) witness.push_back(s.elements());
        return py::make_tuple(r.value, witness);
      },
      py::arg("family"), "Matching number and one maximum matching.");
  m.def("has_matching", &has_matching, py::arg("family"), py::arg("s"));
  m.def("is_shifted", &is_shifted, py::arg("family"));
  m.def("shift_closure", &shift_closure, py::arg("family"));

  m.def("binom", [](std::int64_t n, std::int64_t k) { return to_py(binom(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("kleitman_value", [](std::size_t n, std::size_t s) { return to_py(kleitman_value(n, s)); }, py::arg("n"),
        py::arg("s"));
  m.def("size_P", [](std::size_t mm, std::size_t s, std::size_t l) { return to_py(size_P(mm, s, l)); }, py::arg("m"),
        py::arg("s"), py::arg("l"));
  m.def("check_low_layers", [](std::size_t n, std::size_t k, std::size_t s) { return to_py(check_low_layers(n, k, s)); },
        py::arg("n"), py::arg("k"), py::arg("s"));
  m.def("check_hm_calc", [](std::size_t mm, std::size_t s, std::size_t l) { return to_py(check_hm_calc(mm, s, l)); },
        py::arg("m"), py::arg("s"), py::arg("l"));
  m.def("smallest_t", &smallest_t, py::arg("m"));
  m.def(
      "find_valid_t",
      [](std::size_t mm, std::size_t s, std::size_t l, std::optional<std::size_t> t_max) {
        return find_valid_t(mm, s, l, t_max);
      },
      py::arg("m"), py::arg("s"), py::arg("l"), py::arg("t_max") = py::none());

  // The searches run without the GIL; conversion happens after it is reacquired.
  m.def(
      "oracle_e",
      [](std::size_t n, std::size_t s, bool shifted_only) {
        std::optional<OracleResult> r;
        {
          py::gil_scoped_release release;
          r = oracle_e(n, s, shifted_only);
        }
        return to_py(*r);
      },
      py::arg("n"), py::arg("s"), py::arg("shifted_only") = false);
  m.def(
      "oracle_ek",
      [](std::size_t n, std::size_t k, std::size_t s, bool shifted_only) {
        std::optional<OracleResult> r;
        {
          py::gil_scoped_release release;
          r = oracle_ek(n, k, s, shifted_only);
        }
        return to_py(*r);
      },
      py::arg("n"), py::arg("k"), py::arg("s"), py::arg("shifted_only") = true);

  m.def(
      "report",
      [](const std::string& grid, const std::string& format, unsigned threads) {
        if (format != "csv" && format != "json") throw py::value_error("format must be 'csv' or 'json'");
        const Report r = run_report(parse_grid(grid), "report " + grid, threads);
        return format == "csv" ? report_csv(r) : report_json(r);
      },
      py::arg("grid"), py::arg("format") = "json", py::arg("threads") = 1);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one command line in-process; returns (exit code, stdout, stderr).");
}
