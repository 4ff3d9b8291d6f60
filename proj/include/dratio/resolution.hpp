#pragma once

// Resolution of indeterminacy of plane maps by point blowups, and the
// Picard-lattice bookkeeping that turns a tower of blowups into the D-ratio.
//
// Every boundary curve is identified by an integer: 0 is the strict transform
// of H = {Z = 0}, and i >= 1 is the strict transform of the i-th exceptional
// curve E_i.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dratio/multipoly.hpp"
#include "dratio/projmap.hpp"
#include "dratio/rational.hpp"

namespace dratio {

using LocalPoint = std::array<Rational, 2>;

/// A chart of some stage of the tower, in local coordinates (x0, x1).
struct LocalChart {
  std::string label;
  std::size_t created_by = 0;          // center whose blowup produced it; 0 for a chart of P^2
  std::array<MultiPoly, 3> system;     // the moving linear system (pullbacks of X, Y, Z)
  /// Local equations of the boundary curves that may be visible in this chart.
  std::vector<std::pair<std::size_t, MultiPoly>> boundary;
  /// Pullback of the equation of H without removing exceptional factors.
  MultiPoly total_h = MultiPoly(2);
  std::vector<LocalPoint> blown_up;    // centers taken inside this chart
};

struct BlowupCenter {
  std::size_t index = 0;               // 1-based
  std::size_t chart = 0;               // position in BlowupTower::charts
  LocalPoint chart_coords;             // translation applied before blowing up
  bool on_strict_h = false;
  std::vector<std::size_t> on_strict_e;
  unsigned multiplicity = 0;           // base multiplicity of the system; 0 for extra blowups
  // Orders along the new exceptional curve, read off its chart.
  unsigned order_total_h = 0;          // ord_{E_i}(pi^* z)
  unsigned order_z_form = 0;           // ord_{E_i}(Z-form of the resolved system)
};

struct BlowupTower {
  ProjMap map;
  std::vector<BlowupCenter> centers;
  std::vector<LocalChart> charts;

  std::size_t size() const { return centers.size(); }
};

struct ResolveOptions {
  std::size_t max_centers = 64;
};

class IrrationalBasePoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TowerBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotOnBoundary : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Blow up base points (including infinitely near ones) until the moving
/// system is base-point free in every chart.
/// Throws DimensionUnsupported, IrrationalBasePoint, TowerBudgetExceeded.
BlowupTower resolve(const ProjMap& f, const ResolveOptions& options = {});

/// Blow up one more point of the boundary configuration where the system has
/// no base point. Throws NotOnBoundary when the point is not on a strict
/// boundary curve of the chart, or is a base point, or was already blown up.
BlowupTower extra_blowup(const BlowupTower& tower, std::size_t chart, const LocalPoint& point);

/// A rational point of boundary curve `curve` in `chart`, found by fixing one
/// local coordinate to `param` and solving for the other.
std::optional<LocalPoint> point_on_curve(const LocalChart& chart, std::size_t curve, const Rational& param);

/// Coefficients of pi^*H and phi^*H in the proper-transform basis {H_V, E_1, ..., E_r}.
struct PullbackTable {
  std::size_t r = 0;
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  /// conversion[j][i]: coefficient of the proper class j (0 = H_V, j = E_j) in the
  /// total class i (0 = pullback of the line class, i = e_i).
  std::vector<std::vector<std::int64_t>> conversion;
};

PullbackTable pullback_table(const BlowupTower& tower);

/// a-vector by forward recursion: the coefficient of a new exceptional curve is
/// the sum of the coefficients of the strict curves through its center.
std::vector<std::int64_t> forward_a_vector(const BlowupTower& tower);

/// Orders of vanishing along each exceptional curve, read from the charts:
/// first = ord(pi^* z), second = ord(Z-form of phi). Index 0 is H_V.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> direct_orders(const BlowupTower& tower);

/// degree * max a_i / b_i, or infinity when some a_i != 0 has b_i = 0.
ExtRational d_ratio(const PullbackTable& table, unsigned degree);

/// Resolve and evaluate in one step.
ExtRational d_ratio(const ProjMap& f, const ResolveOptions& options = {});

/// Pairs of boundary curves that meet on the final surface.
std::vector<std::pair<std::size_t, std::size_t>> intersection_graph(const BlowupTower& tower);

/// Text drawing of the boundary configuration.
std::string configuration_diagram(const BlowupTower& tower);

std::string curve_name(std::size_t curve);

struct PropertyCheck {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool all_passed() const;
};

/// Structural invariants of one tower: a_0 = 1, b_0 = deg f, minimality of r,
/// conversion-matrix nonnegativity, agreement of the independent routes.
PropertyReport check_tower_invariants(const BlowupTower& tower);

/// r(f) >= 1, r(f) = 1 iff morphism; with g: the composition bound for g∘f and
/// r(g∘f) = r(f) when g is a morphism.
PropertyReport check_properties(const ProjMap& f, const std::optional<ProjMap>& g = std::nullopt,
                                const ResolveOptions& options = {});

}  // namespace dratio
