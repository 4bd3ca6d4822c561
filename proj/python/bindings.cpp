#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twistordef/deformation_rep.hpp"
#include "twistordef/invariant_cycle.hpp"
#include "twistordef/moduli.hpp"
#include "twistordef/report.hpp"
#include "twistordef/verify.hpp"

namespace py = pybind11;
using namespace twistordef;

namespace {

using Direction = std::pair<std::int64_t, std::int64_t>;
using WeightMap = std::map<std::pair<int, int>, std::size_t>;

SubgroupDirection to_direction(const Direction& d) { return normalize_direction(d.first, d.second); }

Direction from_direction(const SubgroupDirection& d) { return {d.p(), d.q()}; }

WeightMap to_map(const WeightRep& rep) {
  WeightMap out;
  for (const auto& [w, mult] : rep.entries()) out[{w.s_exp, w.t_exp}] = mult;
  return out;
}

std::map<std::string, WeightMap> rep_dict(const AssembledRep& rep) {
  return {{"rep1", to_map(rep.rep1)}, {"rep2", to_map(rep.rep2)}, {"rep3", to_map(rep.rep3)}};
}

// Configurations cross the boundary as strings "p" or "p/q".
Configuration make_configuration(int n, const std::optional<std::vector<std::string>>& a) {
  if (!a) return Configuration::standard(n);
  if (static_cast<int>(a->size()) != n) throw std::invalid_argument("expected " + std::to_string(n) + " parameters");
  std::vector<Rational> params;
  for (const auto& s : *a) params.push_back(Rational::parse(s));
  return Configuration(std::move(params));
}

std::vector<Direction> directions(const std::vector<SubgroupDirection>& ds) {
  std::vector<Direction> out;
  for (const auto& d : ds) out.push_back(from_direction(d));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact torus-weight computations for deformations of toric twistor spaces";

  py::register_exception<DegenerateConfiguration>(m, "DegenerateConfiguration", PyExc_ValueError);

  m.def("normalize_direction", [](std::int64_t p, std::int64_t q) { return from_direction(normalize_direction(p, q)); },
        py::arg("p"), py::arg("q"));
  m.def("assemble", [](int n, std::optional<std::vector<std::string>> a) { return rep_dict(assemble(make_configuration(n, a))); },
        py::arg("n"), py::arg("a") = py::none());
  m.def("closed_form_rep", [](int n) { return rep_dict(closed_form_rep(n)); }, py::arg("n"));
  m.def("alpha_rank",
        [](int n, std::optional<std::vector<std::string>> a) { return alpha_image(make_configuration(n, a)).rows(); },
        py::arg("n"), py::arg("a") = py::none());
  m.def("fixed_dimension", [](int n, const Direction& k) { return fixed_dimension(n, to_direction(k)); }, py::arg("n"),
        py::arg("direction"));
  m.def("torus_invariant_dimension", &torus_invariant_dimension, py::arg("n"));
  m.def("excess_subgroups",
        [](int n, std::optional<int> height) {
          return directions(height ? excess_subgroups(n, *height) : excess_subgroups_complete(n));
        },
        py::arg("n"), py::arg("height") = py::none());
  m.def("moduli_dimension", [](int n, const Direction& k) { return moduli_dimension(n, to_direction(k)); },
        py::arg("n"), py::arg("direction"));
  m.def("isotropy_weight",
        [](int n, const std::string& label, const Direction& k) {
          const CycleModel cycle = build_cycle(n);
          for (const auto& c : cycle.curves())
            if (c.label.to_string() == label) return isotropy_weight(c, to_direction(k));
          throw py::key_error("no curve labelled " + label);
        },
        py::arg("n"), py::arg("curve"), py::arg("direction"));

  // Structured results travel as JSON text; the Python package decodes them.
  m.def("cycle_json",
        [](int n, std::optional<Direction> k) {
          std::optional<SubgroupDirection> dir;
          if (k) dir = to_direction(*k);
          return cycle_json(build_cycle(n), dir).dump();
        },
        py::arg("n"), py::arg("direction") = py::none());
  m.def("audit_json", [](int n) { return audit_json(dimension_audit(n)).dump(); }, py::arg("n"));
  m.def("report_json",
        [](int n, std::optional<int> height) {
          const ScanResult s = scan(n, height.value_or(default_height(n)));
          return report_json(n, assemble(Configuration::standard(n)), s.reports).dump();
        },
        py::arg("n"), py::arg("height") = py::none());
  m.def("validate_report_schema",
        [](const std::string& doc) { return validate_report_schema(nlohmann::json::parse(doc)); }, py::arg("doc"));
  m.def("verify_json",
        [](int n_from, int n_to, std::uint64_t seed, int samples) {
          py::gil_scoped_release release;
          return run_verification(n_from, n_to, seed, samples).to_json().dump();
        },
        py::arg("n_from") = 3, py::arg("n_to") = 12, py::arg("seed") = 1, py::arg("samples") = 5);
}
