#pragma once

// Report records shared by the command line tool and the Python module.
// Exact numbers are written as "p/q" strings; floats appear only next to
// them as convenience renderings.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dratio/heights.hpp"
#include "dratio/mapfile.hpp"
#include "dratio/monoid.hpp"
#include "dratio/resolution.hpp"

namespace dratio {

using Record = nlohmann::ordered_json;

class Report {
 public:
  /// Every record carries its kind under the key "record".
  Record& add(std::string kind);
  const std::vector<Record>& records() const { return records_; }

  /// One compact JSON object per line.
  std::string jsonl() const;
  /// One "kind: key=value, ..." line per record.
  std::string text() const;

 private:
  std::vector<Record> records_;
};

Record to_json(const Rational& q);
Record to_json(const ExtRational& r);
Record to_json(const ProjPoint& p);
Record to_json(const LogSum& s);

struct ResolveReport {
  BlowupTower tower;
  PullbackTable table;
  ExtRational r;
  Report report;
};

ResolveReport resolve_report(const MapSpec& spec, const ResolveOptions& options = {});
Report properties_report(const MapSpec& f, const std::optional<MapSpec>& g, const ResolveOptions& options = {});
Report orbit_report(const MapSpec& spec, const AffinePoint& start, const OrbitOptions& options = {});
Report preper_report(const MapSpec& spec, const HeightBound& bound, const OrbitOptions& options = {});
/// r defaults to the resolved D-ratio (plane maps only).
Report deficit_report(const MapSpec& spec, const std::vector<HeightBound>& bounds,
                      std::optional<Rational> r = std::nullopt, const ResolveOptions& options = {});
Report line_deficit_report(const MapSpec& spec, const AffinePoint& base, const AffinePoint& direction,
                           const std::vector<Integer>& parameters);
Report pair_deficit_report(const PairConfig& pair, const std::vector<HeightBound>& bounds);
Report monoid_report(const PairConfig& pair, unsigned word_cap, const std::vector<HeightBound>& bounds,
                     const PhiOrbitOptions& options = {});
/// Fills in the lower bound deg f / r(f) for plane maps when not given.
Report expansion_report(const MapSpec& spec, ExpansionOptions options, const ResolveOptions& resolve_options = {});

}  // namespace dratio
