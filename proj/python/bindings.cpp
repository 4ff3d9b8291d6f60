#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dratio/mapfile.hpp"
#include "dratio/parse.hpp"
#include "dratio/report.hpp"

namespace py = pybind11;
using namespace dratio;

namespace {

AffinePoint to_affine(const std::vector<std::string>& coords) {
  AffinePoint p;
  for (const auto& c : coords) p.push_back(parse_rational(c));
  return p;
}

std::vector<HeightBound> to_bounds(const std::vector<std::string>& texts) {
  std::vector<HeightBound> out;
  for (const auto& t : texts) out.push_back(HeightBound::parse(t));
  return out;
}

std::optional<ExtRational> to_ext(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return ExtRational::parse(*s);
}

std::vector<std::string> form_strings(const MapSpec& s) {
  auto names = projective_names(s.n);
  std::vector<std::string> out;
  for (const auto& f : s.map.forms()) out.push_back(f.to_string(names));
  return out;
}

PairConfig make_pair(const PairSpec& p, const std::optional<std::string>& r1, const std::optional<std::string>& r2) {
  auto o1 = to_ext(r1), o2 = to_ext(r2);
  return PairConfig(p.f1.map, p.f2.map, o1 ? o1 : p.r1, o2 ? o2 : p.r2);
}

}  // namespace

PYBIND11_MODULE(_dratio, m) {
  m.doc() = "Exact D-ratios of plane maps and height experiments";

  py::register_exception<IrrationalBasePoint>(m, "IrrationalBasePoint", PyExc_ArithmeticError);
  py::register_exception<DimensionUnsupported>(m, "DimensionUnsupported", PyExc_NotImplementedError);
  py::register_exception<TowerBudgetExceeded>(m, "TowerBudgetExceeded", PyExc_RuntimeError);
  py::register_exception<NotJointlyRegular>(m, "NotJointlyRegular", PyExc_ValueError);
  py::register_exception<MapFileError>(m, "MapFileError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<MapSpec>(m, "MapSpec")
      .def_readonly("n", &MapSpec::n)
      .def_readonly("vars", &MapSpec::vars)
      .def_property_readonly("degree", [](const MapSpec& s) { return s.map.degree(); })
      .def_property_readonly("forms", &form_strings)
      .def("apply",
           [](const MapSpec& s, const std::vector<std::string>& point) {
             std::vector<std::string> out;
             for (const auto& c : s.map.apply_affine(to_affine(point))) out.push_back(to_string(c));
             return out;
           },
           py::arg("point"))
      .def("__str__", [](const MapSpec& s) { return s.map.str(); })
      .def("__repr__", [](const MapSpec& s) { return "<MapSpec " + s.map.str() + ">"; });

  py::class_<PairSpec>(m, "PairSpec")
      .def_readonly("f1", &PairSpec::f1)
      .def_readonly("f2", &PairSpec::f2)
      .def_property_readonly("r1", [](const PairSpec& p) { return p.r1 ? std::optional(p.r1->str()) : std::nullopt; })
      .def_property_readonly("r2", [](const PairSpec& p) { return p.r2 ? std::optional(p.r2->str()) : std::nullopt; });

  m.def("parse_map", &parse_map_text, py::arg("text"));
  m.def("parse_pair", &parse_pair_text, py::arg("text"));
  m.def("load_map", &load_map_file, py::arg("path"));
  m.def("load_pair", &load_pair_file, py::arg("path"));

  m.def("compose",
        [](const MapSpec& f, const MapSpec& g) {
          return MapSpec{f.n, f.vars, compose(f.map, g.map)};
        },
        py::arg("f"), py::arg("g"), "f after g");

  m.def("base_points",
        [](const MapSpec& s) {
          BasePointReport r = base_points_p2(s.map);
          std::vector<std::pair<std::string, unsigned>> pts;
          for (const auto& p : r.rational_points) pts.emplace_back(p.point.str(), p.multiplicity);
          std::optional<std::string> irr;
          if (r.irrational_factor) irr = r.irrational_factor->to_string(std::vector<std::string>{"X", "Y"});
          return py::make_tuple(pts, irr);
        },
        py::arg("map"));

  m.def("d_ratio",
        [](const MapSpec& s, std::size_t tower_cap) { return d_ratio(s.map, {tower_cap}).str(); },
        py::arg("map"), py::arg("tower_cap") = 64);

  m.def("pullback_table",
        [](const MapSpec& s, std::size_t tower_cap) {
          PullbackTable t = pullback_table(resolve(s.map, {tower_cap}));
          py::dict d;
          d["r"] = t.r;
          d["a"] = t.a;
          d["b"] = t.b;
          d["conversion"] = t.conversion;
          return d;
        },
        py::arg("map"), py::arg("tower_cap") = 64);

  m.def("configuration_diagram",
        [](const MapSpec& s, std::size_t tower_cap) { return configuration_diagram(resolve(s.map, {tower_cap})); },
        py::arg("map"), py::arg("tower_cap") = 64);

  m.def("is_jointly_regular", [](const MapSpec& a, const MapSpec& b) { return is_jointly_regular(a.map, b.map); });

  m.def("weil_height",
        [](const std::vector<std::string>& point) { return to_string(weil_height(to_affine(point)).max_abs); },
        py::arg("point"), "Largest canonical coordinate M; the height is log M.");

  m.def("delta_s",
        [](unsigned d1, unsigned d2, const std::string& r) { return to_string(delta_s(d1, d2, ExtRational::parse(r))); },
        py::arg("d1"), py::arg("d2"), py::arg("r"));

  m.def("mu_weight", [](const WordIndex& w, unsigned d1, unsigned d2) { return to_string(mu_weight(w, d1, d2)); },
        py::arg("word"), py::arg("d1"), py::arg("d2"));

  m.def("word_identity_check",
        [](unsigned m_max, unsigned d1, unsigned d2, const std::string& r) {
          std::vector<py::tuple> rows;
          for (const auto& row : word_identity_check(m_max, d1, d2, ExtRational::parse(r)))
            rows.push_back(py::make_tuple(row.m, to_string(row.lhs), to_string(row.rhs), row.holds()));
          return rows;
        },
        py::arg("m"), py::arg("d1"), py::arg("d2"), py::arg("r"));

  // Report functions return line-delimited JSON; the Python package decodes it.
  m.def("resolve_report",
        [](const MapSpec& s, std::size_t tower_cap) { return resolve_report(s, {tower_cap}).report.jsonl(); },
        py::arg("map"), py::arg("tower_cap") = 64);
  m.def("properties_report",
        [](const MapSpec& f, const std::optional<MapSpec>& g) { return properties_report(f, g).jsonl(); },
        py::arg("f"), py::arg("g") = std::nullopt);
  m.def("orbit_report",
        [](const MapSpec& s, const std::vector<std::string>& start, std::size_t budget) {
          return orbit_report(s, to_affine(start), {budget, 400}).jsonl();
        },
        py::arg("map"), py::arg("start"), py::arg("budget") = 64);
  m.def("preper_report",
        [](const MapSpec& s, const std::string& bound, std::size_t budget) {
          return preper_report(s, HeightBound::parse(bound), {budget, 400}).jsonl();
        },
        py::arg("map"), py::arg("bound"), py::arg("budget") = 64);
  m.def("deficit_report",
        [](const MapSpec& s, const std::vector<std::string>& bounds, const std::optional<std::string>& r) {
          std::optional<Rational> rr;
          if (r) rr = parse_rational(*r);
          return deficit_report(s, to_bounds(bounds), rr).jsonl();
        },
        py::arg("map"), py::arg("bounds"), py::arg("r") = std::nullopt);
  m.def("line_deficit_report",
        [](const MapSpec& s, const std::vector<std::string>& base, const std::vector<std::string>& dir,
           const std::vector<long>& params) {
          std::vector<Integer> ts;
          for (long t : params) ts.emplace_back(t);
          return line_deficit_report(s, to_affine(base), to_affine(dir), ts).jsonl();
        },
        py::arg("map"), py::arg("base"), py::arg("direction"), py::arg("parameters"));
  m.def("pair_deficit_report",
        [](const PairSpec& p, const std::vector<std::string>& bounds, const std::optional<std::string>& r1,
           const std::optional<std::string>& r2) { return pair_deficit_report(make_pair(p, r1, r2), to_bounds(bounds)).jsonl(); },
        py::arg("pair"), py::arg("bounds"), py::arg("r1") = std::nullopt, py::arg("r2") = std::nullopt);
  m.def("monoid_report",
        [](const PairSpec& p, unsigned words, const std::vector<std::string>& bounds, std::size_t node_budget,
           std::size_t max_depth, const std::optional<std::string>& r1, const std::optional<std::string>& r2) {
          return monoid_report(make_pair(p, r1, r2), words, to_bounds(bounds), {node_budget, max_depth, 400}).jsonl();
        },
        py::arg("pair"), py::arg("words") = 12, py::arg("bounds") = std::vector<std::string>{"log 20"},
        py::arg("node_budget") = 100000, py::arg("max_depth") = 64, py::arg("r1") = std::nullopt,
        py::arg("r2") = std::nullopt);
  m.def("expansion_report",
        [](const MapSpec& s, const std::vector<std::pair<std::string, std::string>>& windows, std::size_t samples,
           std::uint64_t seed) {
          ExpansionOptions o;
          for (const auto& [lo, hi] : windows) o.windows.push_back({Integer(lo), Integer(hi)});
          o.samples_per_family = samples;
          o.seed = seed;
          return expansion_report(s, o).jsonl();
        },
        py::arg("map"), py::arg("windows"), py::arg("samples") = 2000, py::arg("seed") = 1);
}
