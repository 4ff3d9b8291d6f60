#include "dratio/report.hpp"

#include <set>
#include <sstream>

namespace dratio {

Record& Report::add(std::string kind) {
  records_.push_back(Record::object());
  records_.back()["record"] = std::move(kind);
  return records_.back();
}

std::string Report::jsonl() const {
  std::string out;
  for (const auto& r : records_) out += r.dump() + "\n";
  return out;
}

namespace {

std::string render(const Record& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + render(v[i]);
    return s + "]";
  }
  if (v.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      s += (first ? "" : ", ") + k + "=" + render(x);
      first = false;
    }
    return s + "}";
  }
  return v.dump();
}

}  // namespace

std::string Report::text() const {
  std::string out;
  for (const auto& r : records_) {
    const std::string kind = r["record"].get<std::string>();
    if (kind == "ratio") {
      out += "r = " + r["r"].get<std::string>();
      if (r["morphism"].get<bool>()) out += " (endomorphism)";
      out += "; degree = " + r["degree"].dump() + "\n";
      continue;
    }
    out += kind + ":";
    bool first = true;
    for (const auto& [k, v] : r.items()) {
      if (k == "record") continue;
      out += (first ? " " : ", ") + k + "=" + render(v);
      first = false;
    }
    out += "\n";
  }
  return out;
}

Record to_json(const Rational& q) { return to_string(q); }
Record to_json(const ExtRational& r) { return r.str(); }

Record to_json(const ProjPoint& p) {
  Record j;
  j["proj"] = p.str();
  if (p.is_affine()) {
    auto a = p.affine();
    j["affine"] = Record::array();
    for (const auto& x : a) j["affine"].push_back(to_string(x));
  }
  return j;
}

Record to_json(const LogSum& s) {
  Record j;
  j["exact"] = s.str();
  j["approx"] = s.value();
  return j;
}

namespace {

void map_record(Report& rep, const MapSpec& spec, const std::string& label = "map") {
  auto& m = rep.add(label);
  m["n"] = spec.n;
  m["vars"] = spec.vars;
  m["degree"] = spec.map.degree();
  m["forms"] = spec.map.str();
  if (spec.map.is_affine_polynomial()) m["affine"] = spec.map.affine_str(spec.vars);
}

Record point_list(const std::vector<ProjPoint>& pts) {
  auto arr = Record::array();
  for (const auto& p : pts) arr.push_back(p.str());
  return arr;
}

std::vector<Integer> bound_values(const std::vector<HeightBound>& bounds) {
  std::vector<Integer> v;
  for (const auto& b : bounds) v.push_back(b.max_abs);
  return v;
}

void floor_records(Report& rep, const DeficitStats& stats) {
  for (const auto& f : stats.floors) {
    auto& r = rep.add("floor");
    r["bound"] = "log(" + to_string(f.bound) + ")";
    r["points"] = f.count;
    r["min"] = to_json(f.min);
    r["argmin"] = to_json(f.argmin);
  }
  rep.add("stabilized")["value"] = stats.stabilized();
}

}  // namespace

ResolveReport resolve_report(const MapSpec& spec, const ResolveOptions& options) {
  ResolveReport out{resolve(spec.map, options), {}, {}, {}};
  out.table = pullback_table(out.tower);
  out.r = d_ratio(out.table, spec.map.degree());
  Report& rep = out.report;
  map_record(rep, spec);

  BasePointReport bp = base_points_p2(spec.map);
  auto& b = rep.add("base_locus");
  b["points"] = Record::array();
  for (const auto& p : bp.rational_points)
    b["points"].push_back(nlohmann::ordered_json{{"point", p.point.str()}, {"multiplicity", p.multiplicity}});
  if (bp.irrational_factor) b["irrational_factor"] = bp.irrational_factor->to_string(std::vector<std::string>{"X", "Y"});

  for (const auto& c : out.tower.centers) {
    auto& r = rep.add("center");
    r["index"] = c.index;
    r["chart"] = out.tower.charts[c.chart].label;
    r["at"] = Record::array({to_string(c.chart_coords[0]), to_string(c.chart_coords[1])});
    r["multiplicity"] = c.multiplicity;
    auto on = Record::array();
    if (c.on_strict_h) on.push_back(curve_name(0));
    for (auto e : c.on_strict_e) on.push_back(curve_name(e));
    r["on"] = on;
  }

  const auto edges = intersection_graph(out.tower);
  for (std::size_t c = 0; c <= out.table.r; ++c) {
    auto& r = rep.add("curve");
    r["name"] = curve_name(c);
    r["a"] = out.table.a[c];
    r["b"] = out.table.b[c];
    if (c > 0) r["m"] = out.tower.centers[c - 1].multiplicity;
    auto meets = Record::array();
    for (const auto& [p, q] : edges) {
      if (p == c) meets.push_back(curve_name(q));
      if (q == c) meets.push_back(curve_name(p));
    }
    r["meets"] = meets;
  }
  auto& ratio = rep.add("ratio");
  ratio["r"] = out.r.str();
  ratio["degree"] = spec.map.degree();
  ratio["morphism"] = out.table.r == 0;
  return out;
}

Report properties_report(const MapSpec& f, const std::optional<MapSpec>& g, const ResolveOptions& options) {
  Report rep;
  map_record(rep, f, "f");
  if (g) map_record(rep, *g, "g");
  PropertyReport tower = check_tower_invariants(resolve(f.map, options));
  PropertyReport props = check_properties(f.map, g ? std::optional<ProjMap>(g->map) : std::nullopt, options);
  bool all = true;
  for (const auto* pr : {&tower, &props})
    for (const auto& c : pr->checks) {
      auto& r = rep.add("check");
      r["name"] = c.name;
      r["passed"] = c.passed;
      r["witness"] = c.witness;
      all = all && c.passed;
    }
  rep.add("summary")["all_passed"] = all;
  return rep;
}

Report orbit_report(const MapSpec& spec, const AffinePoint& start, const OrbitOptions& options) {
  Report rep;
  map_record(rep, spec);
  OrbitRecord o = orbit(spec.map, ProjPoint::from_affine(start), options);
  auto& r = rep.add("orbit");
  r["start"] = to_json(o.start);
  r["status"] = to_string(o.status);
  r["steps"] = o.steps;
  if (o.status == OrbitStatus::preperiodic) {
    r["tail"] = o.tail;
    r["period"] = o.period;
    r["verified"] = verify_preperiodic(spec.map, o);
  }
  auto hs = Record::array();
  for (const auto& h : o.heights) hs.push_back("log(" + to_string(h.max_abs) + ")");
  r["heights"] = hs;
  return rep;
}

Report preper_report(const MapSpec& spec, const HeightBound& bound, const OrbitOptions& options) {
  Report rep;
  map_record(rep, spec);
  PreperiodicSearch s = preperiodic_search(spec.map, bound, options);
  for (const auto& o : s.preperiodic) {
    auto& r = rep.add("preperiodic");
    r["point"] = to_json(o.start);
    r["tail"] = o.tail;
    r["period"] = o.period;
  }
  auto& sum = rep.add("summary");
  sum["bound"] = bound.str();
  sum["budget"] = options.budget;
  sum["points"] = s.total;
  sum["preperiodic"] = s.preperiodic.size();
  sum["escaped"] = s.escaped;
  sum["undecided"] = s.undecided.size();
  sum["undecided_points"] = point_list(s.undecided);
  return rep;
}

Report deficit_report(const MapSpec& spec, const std::vector<HeightBound>& bounds, std::optional<Rational> r,
                      const ResolveOptions& options) {
  Report rep;
  map_record(rep, spec);
  auto& head = rep.add("deficit");
  if (!r) {
    ExtRational rr = d_ratio(spec.map, options);
    if (rr.is_infinite()) throw std::invalid_argument("r(f) is infinite; the deficit has no finite coefficient");
    r = rr.value();
    head["r_source"] = "computed";
  } else {
    head["r_source"] = "supplied";
  }
  head["r"] = to_string(*r);
  head["formula"] = "(r/d) h(f(P)) - h(P)";
  floor_records(rep, ratio_deficit(spec.map, *r, bound_values(bounds)));
  return rep;
}

Report line_deficit_report(const MapSpec& spec, const AffinePoint& base, const AffinePoint& direction,
                           const std::vector<Integer>& parameters) {
  Report rep;
  map_record(rep, spec);
  LineDeficitReport ld = line_deficit(spec.map, base, direction, parameters);
  auto& head = rep.add("line");
  head["base"] = affine_str(base);
  head["direction"] = affine_str(direction);
  head["at_infinity"] = ld.direction_at_infinity.str();
  head["meets_indeterminacy"] = ld.meets_indeterminacy;
  for (const auto& e : ld.entries) {
    auto& r = rep.add("entry");
    r["t"] = to_string(e.t);
    r["point"] = e.point.str();
    r["deficit"] = to_json(e.deficit);
  }
  rep.add("summary")["strictly_decreasing"] = ld.strictly_decreasing();
  return rep;
}

namespace {

void pair_records(Report& rep, const PairConfig& pair) {
  auto& r = rep.add("pair");
  r["f1"] = pair.f1().str();
  r["f2"] = pair.f2().str();
  r["d1"] = pair.d1();
  r["d2"] = pair.d2();
  r["r1"] = pair.r1().str();
  r["r1_source"] = to_string(pair.r1_source());
  r["r2"] = pair.r2().str();
  r["r2_source"] = to_string(pair.r2_source());
  r["jointly_regular"] = pair.joint_regularity_verified() ? "verified" : "unverified";
}

}  // namespace

Report pair_deficit_report(const PairConfig& pair, const std::vector<HeightBound>& bounds) {
  Report rep;
  pair_records(rep, pair);
  rep.add("deficit")["formula"] = "h(f1 P)/d1 + h(f2 P)/d2 - (1 + min(1/r1, 1/r2)) h(P)";
  floor_records(rep, pair_deficit(pair, bound_values(bounds)));
  return rep;
}

Report monoid_report(const PairConfig& pair, unsigned word_cap, const std::vector<HeightBound>& bounds,
                     const PhiOrbitOptions& options) {
  Report rep;
  pair_records(rep, pair);
  const Rational delta = pair.delta_s();
  auto& d = rep.add("delta_s");
  d["r"] = pair.r().str();
  d["value"] = to_string(delta);
  d["less_than_one"] = delta < 1;
  bool all = true;
  for (const auto& row : word_identity_check(word_cap, pair.d1(), pair.d2(), pair.r(), word_cap)) {
    auto& w = rep.add("word_identity");
    w["m"] = row.m;
    w["lhs"] = to_string(row.lhs);
    w["rhs"] = to_string(row.rhs);
    w["holds"] = row.holds();
    all = all && row.holds();
  }
  rep.add("word_identity_summary")["all_hold"] = all;

  std::optional<std::set<ProjPoint>> previous;
  for (const auto& b : bounds) {
    PrePhiSearch s = pre_phi_search(pair, b, options);
    std::set<ProjPoint> found;
    for (const auto& o : s.finite) found.insert(o.start);
    auto& r = rep.add("pre_phi");
    r["bound"] = b.str();
    r["certified"] = s.certified;
    r["points"] = s.total;
    r["finite"] = point_list({found.begin(), found.end()});
    r["escaped"] = s.escaped;
    r["undecided"] = s.undecided.size();
    if (previous) r["unchanged"] = (found == *previous);
    previous = std::move(found);
  }
  return rep;
}

Report expansion_report(const MapSpec& spec, ExpansionOptions options, const ResolveOptions& resolve_options) {
  Report rep;
  map_record(rep, spec);
  auto& head = rep.add("expansion");
  if (!options.lower_bound && spec.n == 2) {
    ExtRational r = d_ratio(spec.map, resolve_options);
    if (!r.is_infinite()) options.lower_bound = Rational(spec.map.degree()) / r.value();
  }
  head["lower_bound"] = options.lower_bound ? Record(to_string(*options.lower_bound)) : Record(nullptr);
  head["seed"] = options.seed;
  head["samples_per_family"] = options.samples_per_family;
  ExpansionEstimate est = expansion_coefficient_estimate(spec.map, options);
  for (const auto& w : est.windows) {
    auto& r = rep.add("window");
    r["lo"] = to_string(w.window.lo);
    r["hi"] = to_string(w.window.hi);
    r["exhaustive"] = w.exhaustive;
    r["evaluated"] = w.evaluated;
    r["min_ratio"] = w.min_ratio;
    r["argmin"] = w.argmin.str();
    r["respects_lower_bound"] = w.respects_lower_bound;
  }
  rep.add("estimate")["c"] = est.estimate();
  return rep;
}

}  // namespace dratio
