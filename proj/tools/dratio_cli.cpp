#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "dratio/mapfile.hpp"
#include "dratio/parse.hpp"
#include "dratio/report.hpp"

using namespace dratio;

namespace {

struct Common {
  bool json = false;
  std::vector<std::string> bounds;
  std::size_t budget = 64;
  std::size_t tower_cap = 64;
  std::uint64_t seed = 1;
};

std::vector<HeightBound> parse_bounds(const std::vector<std::string>& texts) {
  std::vector<HeightBound> out;
  for (const auto& t : texts) out.push_back(HeightBound::parse(t));
  return out;
}

void emit(const Report& rep, bool json, const std::string& extra_text = {}) {
  if (json) {
    std::cout << rep.jsonl();
  } else {
    std::cout << rep.text() << extra_text;
  }
}

std::vector<HeightWindow> parse_windows(const std::string& text) {
  std::vector<HeightWindow> out;
  for (const auto& part : split_top_level(text)) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("window '" + part + "' is not lo:hi");
    out.push_back({Integer(part.substr(0, colon)), Integer(part.substr(colon + 1))});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"D-ratios of plane maps and height experiments"};
  app.require_subcommand(1);
  Common c;
  std::string file, compose_with, point, base, dir, windows = "10:100,100:10000", r_text;
  std::size_t count = 10000, samples = 2000, words = 12, node_budget = 100000;

  auto add_common = [&](CLI::App* sub, bool with_bounds) {
    sub->add_flag("--json", c.json, "Line-delimited JSON records");
    sub->add_option("--tower-cap", c.tower_cap, "Maximum number of blowups")->check(CLI::PositiveNumber);
    if (with_bounds) sub->add_option("--height-bound", c.bounds, "Height bound: float or log N (repeatable)");
  };

  auto* resolve_cmd = app.add_subcommand("resolve", "Resolve indeterminacy and print the tower");
  resolve_cmd->add_option("map", file, "Map file")->required();
  add_common(resolve_cmd, false);

  auto* ratio_cmd = app.add_subcommand("ratio", "Print r(f)");
  ratio_cmd->add_option("map", file, "Map file")->required();
  add_common(ratio_cmd, false);

  auto* props_cmd = app.add_subcommand("check-props", "Check structural properties of r");
  props_cmd->add_option("map", file, "Map file")->required();
  props_cmd->add_option("--compose-with", compose_with, "Second map g for the g∘f checks");
  add_common(props_cmd, false);

  auto* orbit_cmd = app.add_subcommand("orbit", "Forward orbit of one point");
  orbit_cmd->add_option("map", file, "Map file")->required();
  orbit_cmd->add_option("--point", point, "Affine start point, e.g. 1/2,3")->required();
  orbit_cmd->add_option("--budget", c.budget, "Iteration budget")->check(CLI::PositiveNumber);
  add_common(orbit_cmd, false);

  auto* preper_cmd = app.add_subcommand("preper", "Preperiodic points up to a height bound");
  preper_cmd->add_option("map", file, "Map file")->required();
  preper_cmd->add_option("--budget", c.budget, "Iteration budget")->check(CLI::PositiveNumber);
  add_common(preper_cmd, true);

  auto* deficit_cmd = app.add_subcommand("deficit", "Floors of (r/d) h(f(P)) - h(P)");
  deficit_cmd->add_option("map", file, "Map file")->required();
  deficit_cmd->add_option("--r", r_text, "Use this D-ratio instead of resolving");
  add_common(deficit_cmd, true);

  auto* line_cmd = app.add_subcommand("line-deficit", "(1/d) h(f(P)) - h(P) along base + t*dir, t = 1..count");
  line_cmd->add_option("map", file, "Map file")->required();
  line_cmd->add_option("--base", base, "Affine base point")->required();
  line_cmd->add_option("--dir", dir, "Direction vector")->required();
  line_cmd->add_option("--count", count, "Number of parameters")->check(CLI::PositiveNumber);
  add_common(line_cmd, false);

  auto* pair_cmd = app.add_subcommand("pair-deficit", "Floors of the two-map deficit");
  pair_cmd->add_option("pair", file, "Pair file")->required();
  add_common(pair_cmd, true);

  auto* monoid_cmd = app.add_subcommand("monoid", "delta_S, the word identity and Pre(Phi_S)");
  monoid_cmd->add_option("pair", file, "Pair file")->required();
  monoid_cmd->add_option("--words", words, "Largest word length checked")->check(CLI::Range(0, 20));
  monoid_cmd->add_option("--budget", c.budget, "Largest word length expanded")->check(CLI::PositiveNumber);
  monoid_cmd->add_option("--node-budget", node_budget, "Distinct points per orbit")->check(CLI::PositiveNumber);
  add_common(monoid_cmd, true);

  auto* exp_cmd = app.add_subcommand("expansion", "Window minima of h(f(P)) / h(P)");
  exp_cmd->add_option("map", file, "Map file")->required();
  exp_cmd->add_option("--windows", windows, "Comma separated lo:hi bounds on max |coordinate|");
  exp_cmd->add_option("--samples", samples, "Samples per family")->check(CLI::PositiveNumber);
  exp_cmd->add_option("--seed", c.seed, "Random seed");
  add_common(exp_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    ResolveOptions ropt{c.tower_cap};
    auto bounds_or = [&](std::vector<std::string> fallback) {
      return parse_bounds(c.bounds.empty() ? fallback : c.bounds);
    };

    if (*resolve_cmd) {
      auto rr = resolve_report(load_map_file(file), ropt);
      emit(rr.report, c.json, "diagram:\n" + configuration_diagram(rr.tower));
    } else if (*ratio_cmd) {
      auto rr = resolve_report(load_map_file(file), ropt);
      Report rep;
      for (const auto& rec : rr.report.records())
        if (rec["record"] == "map" || rec["record"] == "ratio") rep.add(rec["record"].get<std::string>()) = rec;
      emit(rep, c.json);
    } else if (*props_cmd) {
      std::optional<MapSpec> g;
      if (!compose_with.empty()) g = load_map_file(compose_with);
      emit(properties_report(load_map_file(file), g, ropt), c.json);
    } else if (*orbit_cmd) {
      emit(orbit_report(load_map_file(file), parse_affine_point(point), {c.budget, 400}), c.json);
    } else if (*preper_cmd) {
      auto bounds = bounds_or({"log 20"});
      Report rep;
      auto spec = load_map_file(file);
      for (const auto& b : bounds) {
        Report one = preper_report(spec, b, {c.budget, 400});
        for (const auto& rec : one.records()) rep.add("") = rec;
      }
      emit(rep, c.json);
    } else if (*deficit_cmd) {
      std::optional<Rational> r;
      if (!r_text.empty()) r = parse_rational(r_text);
      emit(deficit_report(load_map_file(file), bounds_or({"log 50", "log 100"}), r, ropt), c.json);
    } else if (*line_cmd) {
      std::vector<Integer> params;
      for (std::size_t t = 1; t <= count; ++t) params.emplace_back(static_cast<unsigned long>(t));
      emit(line_deficit_report(load_map_file(file), parse_affine_point(base), parse_affine_point(dir), params), c.json);
    } else if (*pair_cmd || *monoid_cmd) {
      PairSpec ps = load_pair_file(file);
      PairConfig pair(ps.f1.map, ps.f2.map, ps.r1, ps.r2);
      if (*pair_cmd) {
        emit(pair_deficit_report(pair, bounds_or({"log 50"})), c.json);
      } else {
        if (pair.delta_s() >= 1) std::cerr << "warning: delta_S >= 1, Pre(Phi_S) search is exploratory\n";
        emit(monoid_report(pair, static_cast<unsigned>(words), bounds_or({"log 20", "log 40"}),
                           {node_budget, c.budget, 400}),
             c.json);
      }
    } else if (*exp_cmd) {
      ExpansionOptions opts;
      opts.windows = parse_windows(windows);
      opts.samples_per_family = samples;
      opts.seed = c.seed;
      emit(expansion_report(load_map_file(file), opts, ropt), c.json);
    }
  } catch (const IrrationalBasePoint& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionUnsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TowerBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotJointlyRegular& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
