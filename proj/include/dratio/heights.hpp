#pragma once

// Weil heights over Q, exact orbit iteration, and the height experiments built
// on them: bounded-height preperiodic search, deficit floors, line deficits
// through indeterminacy points, and height expansion windows.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dratio/logsum.hpp"
#include "dratio/points.hpp"
#include "dratio/projmap.hpp"

namespace dratio {

/// h(P) = log M with M the largest absolute canonical integer coordinate.
struct HeightValue {
  Integer max_abs;
  double value() const { return log_of(max_abs); }
  LogSum exact() const { return LogSum::log(max_abs); }
};

HeightValue weil_height(const ProjPoint& p);
HeightValue weil_height(std::span<const Rational> affine);

/// Height bound B given as "log N", "log(N)", "logN" or a float; enumeration
/// uses the integer N = floor(exp(B)).
struct HeightBound {
  Integer max_abs;
  static HeightBound parse(const std::string& text);
  static HeightBound of(long n) { return {Integer(n)}; }
  std::string str() const { return "log(" + to_string(max_abs) + ")"; }
};

/// Calls `visit` for every point of A^n(Q) whose canonical integer tuple
/// (a_1, ..., a_n, c), c >= 1, gcd 1, has max |entry| <= bound. The order is
/// deterministic: c ascending, then the a_i lexicographically.
void for_each_affine_point(std::size_t n, const Integer& bound, const std::function<void(const ProjPoint&)>& visit);
std::vector<ProjPoint> affine_points_up_to(std::size_t n, const Integer& bound);

enum class OrbitStatus { preperiodic, escaped, budget_exhausted };
std::string to_string(OrbitStatus s);

struct OrbitOptions {
  std::size_t budget = 64;        // iteration steps
  unsigned escape_digits = 400;   // escape once the canonical max exceeds 10^escape_digits
};

struct OrbitRecord {
  ProjPoint start;
  OrbitStatus status = OrbitStatus::budget_exhausted;
  std::size_t tail = 0;     // preperiodic: f^(tail+period)(P) = f^tail(P), both minimal
  std::size_t period = 0;
  std::size_t steps = 0;    // iterations performed
  std::vector<HeightValue> heights;  // h(f^k(P)) for k = 0..steps
};

/// Exact forward orbit. Budget exhaustion is reported as undecided, never as preperiodic.
/// Throws std::domain_error if an iterate lands on H.
OrbitRecord orbit(const ProjMap& f, const ProjPoint& start, const OrbitOptions& options = {});

/// Re-checks f^(tail+period)(P) = f^tail(P) from scratch.
bool verify_preperiodic(const ProjMap& f, const OrbitRecord& record);

struct PreperiodicSearch {
  std::vector<OrbitRecord> preperiodic;
  std::vector<ProjPoint> undecided;
  std::size_t escaped = 0;
  std::size_t total = 0;
};

PreperiodicSearch preperiodic_search(const ProjMap& f, const HeightBound& bound, const OrbitOptions& options = {});

/// Minimum of a deficit over all points up to each of several height bounds.
struct DeficitFloor {
  Integer bound;
  LogSum min;
  ProjPoint argmin;
  std::size_t count = 0;
};

struct DeficitStats {
  std::vector<DeficitFloor> floors;  // one per requested bound, ascending
  const DeficitFloor& overall() const { return floors.back(); }
  /// True when the floor did not move between the last two bounds.
  bool stabilized() const;
};

/// Enumerates every point up to the largest bound and tracks the minimum of
/// `deficit(P)` for each bound.
DeficitStats deficit_floors(std::size_t n, std::vector<Integer> bounds,
                            const std::function<LogSum(const ProjPoint&)>& deficit);

/// Delta(P) = (r/deg f) h(f(P)) - h(P).
LogSum ratio_deficit_at(const ProjMap& f, const Rational& r, const ProjPoint& p);
DeficitStats ratio_deficit(const ProjMap& f, const Rational& r, std::vector<Integer> bounds);

/// Rational points base + t * direction of an affine line, t = the given parameters.
struct LineDeficitEntry {
  Integer t;
  ProjPoint point;
  LogSum deficit;  // (1/deg f) h(f(P)) - h(P)
};

struct LineDeficitReport {
  ProjPoint direction_at_infinity;  // where the line meets H
  bool meets_indeterminacy = false;
  std::vector<LineDeficitEntry> entries;
  /// Strictly decreasing over the entries.
  bool strictly_decreasing() const;
};

LineDeficitReport line_deficit(const ProjMap& f, std::span<const Rational> base,
                                         std::span<const Rational> direction, std::span<const Integer> parameters);

/// Height window: canonical max |coordinate| in [lo, hi), i.e. h in [log lo, log hi).
struct HeightWindow {
  Integer lo;
  Integer hi;
};

struct ExpansionOptions {
  std::vector<HeightWindow> windows;
  std::size_t samples_per_family = 2000;
  std::uint64_t seed = 1;
  /// Windows with at most this many candidate tuples are enumerated exhaustively.
  std::size_t exhaustive_limit = 200000;
  /// deg f / r(f), checked exactly against every evaluated point when given.
  std::optional<Rational> lower_bound;
};

struct ExpansionWindowResult {
  HeightWindow window;
  bool exhaustive = false;
  std::size_t evaluated = 0;
  double min_ratio = 0;
  ProjPoint argmin;
  bool respects_lower_bound = true;
};

struct ExpansionEstimate {
  std::vector<ExpansionWindowResult> windows;
  double estimate() const { return windows.empty() ? 0.0 : windows.back().min_ratio; }
};

/// Window minima of h(f(P)) / h(P). Sampled windows draw uniform points plus
/// points on the coordinate lines x_i = alpha for a few small alpha, where
/// the slowest growth typically lives. Throws std::invalid_argument for an
/// empty window.
ExpansionEstimate expansion_coefficient_estimate(const ProjMap& f, const ExpansionOptions& options);

}  // namespace dratio
