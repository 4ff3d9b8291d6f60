#include "dratio/mapfile.hpp"

#include <fstream>
#include <sstream>

#include "dratio/parse.hpp"

namespace dratio {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct MapLine {
  std::string key;
  std::string body;
  std::size_t line;
};

struct RawFile {
  std::optional<std::size_t> n;
  std::vector<std::string> vars;
  std::vector<MapLine> maps;
  std::optional<ExtRational> r1, r2;
};

RawFile scan(const std::string& text) {
  RawFile raw;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw MapFileError("expected 'key = value'", lineno);
    std::string key = trim(std::string_view(t).substr(0, eq));
    std::string value = trim(std::string_view(t).substr(eq + 1));
    try {
      if (key == "n") {
        std::size_t used = 0;
        long v = std::stol(value, &used);
        if (used != value.size() || v < 1) throw MapFileError("n must be a positive integer", lineno);
        raw.n = static_cast<std::size_t>(v);
      } else if (key == "vars") {
        raw.vars.clear();
        for (auto& v : split_top_level(value)) raw.vars.push_back(trim(v));
      } else if (key == "f" || key == "F") {
        raw.maps.push_back({key, value, lineno});
      } else if (key == "r1" || key == "r2") {
        (key == "r1" ? raw.r1 : raw.r2) = ExtRational::parse(value);
      } else {
        throw MapFileError("unknown key '" + key + "'", lineno);
      }
    } catch (const MapFileError&) {
      throw;
    } catch (const std::exception& e) {
      throw MapFileError(e.what(), lineno);
    }
  }
  return raw;
}

std::string strip_brackets(const std::string& body, char open, char close, std::size_t line) {
  if (body.size() < 2 || body.front() != open || body.back() != close)
    throw MapFileError(std::string("map must be written as ") + open + "..." + close, line);
  return body.substr(1, body.size() - 2);
}

MapSpec build(const RawFile& raw, const MapLine& m) {
  MapSpec spec;
  spec.n = raw.n ? *raw.n : (raw.vars.empty() ? 0 : raw.vars.size());
  if (spec.n == 0) throw MapFileError("missing n", m.line);
  spec.vars = raw.vars.empty() ? affine_names(spec.n) : raw.vars;
  if (spec.vars.size() != spec.n) throw MapFileError("vars does not match n", m.line);
  try {
    if (m.key == "f") {
      auto parts = split_top_level(strip_brackets(m.body, '(', ')', m.line));
      if (parts.size() != spec.n)
        throw MapFileError("expected " + std::to_string(spec.n) + " components, got " + std::to_string(parts.size()), m.line);
      std::vector<MultiPoly> comps;
      for (const auto& p : parts) comps.push_back(parse_poly(p, spec.vars));
      spec.map = homogenize_affine(comps);
    } else {
      auto names = projective_names(spec.n);
      auto parts = split_top_level(strip_brackets(m.body, '[', ']', m.line));
      if (parts.size() != spec.n + 1)
        throw MapFileError("expected " + std::to_string(spec.n + 1) + " forms, got " + std::to_string(parts.size()), m.line);
      std::vector<MultiPoly> forms;
      for (const auto& p : parts) forms.push_back(parse_poly(p, names));
      spec.map = ProjMap::from_forms(std::move(forms));
    }
  } catch (const MapFileError&) {
    throw;
  } catch (const std::exception& e) {
    throw MapFileError(e.what(), m.line);
  }
  return spec;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MapFileError("cannot open " + path, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

MapSpec parse_map_text(const std::string& text) {
  RawFile raw = scan(text);
  if (raw.maps.size() != 1) throw MapFileError("expected exactly one map, found " + std::to_string(raw.maps.size()), 0);
  if (raw.r1 || raw.r2) throw MapFileError("r1/r2 belong in pair files", 0);
  return build(raw, raw.maps[0]);
}

PairSpec parse_pair_text(const std::string& text) {
  RawFile raw = scan(text);
  if (raw.maps.size() != 2) throw MapFileError("expected two maps, found " + std::to_string(raw.maps.size()), 0);
  return {build(raw, raw.maps[0]), build(raw, raw.maps[1]), raw.r1, raw.r2};
}

MapSpec load_map_file(const std::string& path) { return parse_map_text(slurp(path)); }
PairSpec load_pair_file(const std::string& path) { return parse_pair_text(slurp(path)); }

}  // namespace dratio
