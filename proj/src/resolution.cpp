#include "dratio/resolution.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "dratio/roots.hpp"

namespace dratio {

namespace {

MultiPoly x0() { return MultiPoly::variable(2, 0); }
MultiPoly x1() { return MultiPoly::variable(2, 1); }

MultiPoly exceptional_power(std::size_t var, unsigned k) {
  Exponents e(2, 0);
  e[var] = k;
  return MultiPoly::monomial(e, 1);
}

unsigned order_along(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) throw std::logic_error("order of the zero polynomial along a curve");
  unsigned low = ~0u;
  for (const auto& [e, c] : p.terms()) low = std::min(low, e[var]);
  return low;
}

unsigned system_multiplicity(const std::array<MultiPoly, 3>& sys) {
  unsigned m = ~0u;
  for (const auto& p : sys)
    if (auto ord = p.order_at_origin()) m = std::min(m, *ord);
  return m;
}

struct Pending {
  std::size_t chart;
  LocalPoint point;
};

// Blow up `point` of chart `chart_index`; appends the center and its two charts
// (A: (x0, x0*x1), exceptional x0 = 0; B: (x0*x1, x1), exceptional x1 = 0).
// Returns the multiplicity removed.
unsigned blow_up(BlowupTower& tower, std::size_t chart_index, const LocalPoint& point) {
  const LocalChart src = tower.charts[chart_index];
  const std::size_t index = tower.centers.size() + 1;

  std::array<MultiPoly, 3> sys;
  for (std::size_t k = 0; k < 3; ++k) sys[k] = src.system[k].translate(point);
  const unsigned m = system_multiplicity(sys);

  BlowupCenter center;
  center.index = index;
  center.chart = chart_index;
  center.chart_coords = point;
  center.multiplicity = m;

  std::vector<std::pair<std::size_t, MultiPoly>> boundary;
  for (const auto& [curve, eq] : src.boundary) {
    MultiPoly moved = eq.translate(point);
    if (moved.constant_term() == 0) {
      if (curve == 0)
        center.on_strict_h = true;
      else
        center.on_strict_e.push_back(curve);
    }
    boundary.emplace_back(curve, std::move(moved));
  }
  std::sort(center.on_strict_e.begin(), center.on_strict_e.end());
  MultiPoly total_h = src.total_h.translate(point);

  const std::array<std::vector<MultiPoly>, 2> images = {
      std::vector<MultiPoly>{x0(), x0() * x1()},
      std::vector<MultiPoly>{x0() * x1(), x1()},
  };
  const char* suffix[] = {"A", "B"};
  for (std::size_t side = 0; side < 2; ++side) {
    const std::size_t exc = side;  // exceptional curve is x0 = 0 in A, x1 = 0 in B
    LocalChart chart;
    chart.label = "E" + std::to_string(index) + "." + suffix[side];
    chart.created_by = index;
    for (std::size_t k = 0; k < 3; ++k) {
      MultiPoly pulled = sys[k].substitute(images[side]);
      chart.system[k] = pulled.is_zero() ? pulled : *divide_exact(pulled, exceptional_power(exc, m));
    }
    for (const auto& [curve, eq] : boundary) {
      unsigned ord = *eq.order_at_origin();
      MultiPoly strict = *divide_exact(eq.substitute(images[side]), exceptional_power(exc, ord));
      if (strict.is_constant()) continue;  // not visible in this chart
      chart.boundary.emplace_back(curve, std::move(strict));
    }
    chart.boundary.emplace_back(index, side == 0 ? x0() : x1());
    chart.total_h = total_h.substitute(images[side]);
    if (side == 0) {
      center.order_total_h = order_along(chart.total_h, 0);
      center.order_z_form = order_along(chart.system[2], 0);
    }
    tower.charts.push_back(std::move(chart));
  }
  tower.charts[chart_index].blown_up.push_back(point);
  tower.centers.push_back(std::move(center));
  return m;
}

// Base points of the system on the newest exceptional curve, i.e. in the two
// charts appended last.
std::vector<Pending> base_points_on_new_exceptional(const BlowupTower& tower) {
  const std::size_t a = tower.charts.size() - 2, b = tower.charts.size() - 1;
  std::vector<Pending> out;

  MultiPoly g(2);
  for (const auto& p : tower.charts[a].system) {
    MultiPoly restricted = p.set_variable(0, 0);
    if (!restricted.is_zero()) g = gcd_poly(g, restricted);
  }
  if (!g.is_constant()) {
    auto roots = rational_roots_univariate(g, 1);
    MultiPoly rest = g;
    for (const auto& t : roots) {
      MultiPoly lin = x1() - MultiPoly::constant(2, t);
      while (auto q = divide_exact(rest, lin)) rest = *q;
      out.push_back({a, LocalPoint{Rational(0), t}});
    }
    if (!rest.is_constant())
      throw IrrationalBasePoint("base points on E" + std::to_string(tower.centers.size()) +
                                " are not defined over Q: " + rest.to_string(std::vector<std::string>{"x0", "t"}));
  }
  const auto& sys_b = tower.charts[b].system;
  if (std::all_of(sys_b.begin(), sys_b.end(), [](const MultiPoly& p) { return p.constant_term() == 0; }))
    out.push_back({b, LocalPoint{Rational(0), Rational(0)}});
  return out;
}

}  // namespace

BlowupTower resolve(const ProjMap& f, const ResolveOptions& options) {
  if (f.dim() != 2) throw DimensionUnsupported("resolution is implemented for maps of the plane only");
  BasePointReport report = base_points_p2(f);
  if (report.irrational_factor)
    throw IrrationalBasePoint("base points on H are not defined over Q: " +
                              report.irrational_factor->to_string(std::vector<std::string>{"X", "Y"}));

  BlowupTower tower{f, {}, {}};
  std::deque<Pending> queue;
  for (const auto& bp : report.rational_points) {
    LocalChart chart;
    chart.label = (bp.point[0] != 0 ? "X=1 at " : "Y=1 at ") + bp.point.str();
    auto local = local_forms_at(f, bp.point);
    for (std::size_t k = 0; k < 3; ++k) chart.system[k] = local[k];
    chart.boundary.emplace_back(0, x1());
    chart.total_h = x1();
    tower.charts.push_back(std::move(chart));
    queue.push_back({tower.charts.size() - 1, LocalPoint{Rational(0), Rational(0)}});
  }

  while (!queue.empty()) {
    if (tower.centers.size() >= options.max_centers)
      throw TowerBudgetExceeded("resolution needs more than " + std::to_string(options.max_centers) + " blowups");
    Pending next = queue.front();
    queue.pop_front();
    unsigned m = blow_up(tower, next.chart, next.point);
    if (m == 0) throw std::logic_error("queued point is not a base point");
    for (auto& p : base_points_on_new_exceptional(tower)) queue.push_back(p);
  }
  return tower;
}

BlowupTower extra_blowup(const BlowupTower& tower, std::size_t chart, const LocalPoint& point) {
  if (chart >= tower.charts.size()) throw std::out_of_range("no such chart");
  const LocalChart& c = tower.charts[chart];
  bool on_boundary = false;
  for (const auto& [curve, eq] : c.boundary)
    if (eq.evaluate(std::span<const Rational>(point)) == 0) on_boundary = true;
  if (!on_boundary) throw NotOnBoundary("point is not on the boundary configuration in chart " + c.label);
  if (std::find(c.blown_up.begin(), c.blown_up.end(), point) != c.blown_up.end())
    throw NotOnBoundary("point was already blown up in chart " + c.label);
  std::array<MultiPoly, 3> sys;
  for (std::size_t k = 0; k < 3; ++k) sys[k] = c.system[k].translate(point);
  if (system_multiplicity(sys) != 0) throw NotOnBoundary("point is a base point of the system");

  BlowupTower out = tower;
  blow_up(out, chart, point);
  return out;
}

std::optional<LocalPoint> point_on_curve(const LocalChart& chart, std::size_t curve, const Rational& param) {
  auto it = std::find_if(chart.boundary.begin(), chart.boundary.end(),
                         [curve](const auto& entry) { return entry.first == curve; });
  if (it == chart.boundary.end()) return std::nullopt;
  const MultiPoly& eq = it->second;
  for (std::size_t fixed = 0; fixed < 2; ++fixed) {
    MultiPoly restricted = eq.set_variable(fixed, param);
    if (restricted.is_zero()) {
      LocalPoint p{Rational(0), Rational(0)};
      p[fixed] = param;
      return p;
    }
    if (restricted.is_constant()) continue;
    auto roots = rational_roots_univariate(restricted, 1 - fixed);
    if (roots.empty()) continue;
    LocalPoint p;
    p[fixed] = param;
    p[1 - fixed] = roots.front();
    return p;
  }
  return std::nullopt;
}

PullbackTable pullback_table(const BlowupTower& tower) {
  const std::size_t r = tower.centers.size();
  PullbackTable t;
  t.r = r;
  t.conversion.assign(r + 1, std::vector<std::int64_t>(r + 1, 0));
  auto& conv = t.conversion;
  // e_i = E_i + sum over later centers j lying on strict E_i of e_j
  for (std::size_t i = r; i >= 1; --i) {
    conv[i][i] = 1;
    for (std::size_t j = i + 1; j <= r; ++j) {
      const auto& on = tower.centers[j - 1].on_strict_e;
      if (std::find(on.begin(), on.end(), i) == on.end()) continue;
      for (std::size_t row = 0; row <= r; ++row) conv[row][i] += conv[row][j];
    }
  }
  // pullback of the line class = H_V + sum of e_j over centers on strict H
  conv[0][0] = 1;
  for (std::size_t j = 1; j <= r; ++j)
    if (tower.centers[j - 1].on_strict_h)
      for (std::size_t row = 0; row <= r; ++row) conv[row][0] += conv[row][j];

  const auto d = static_cast<std::int64_t>(tower.map.degree());
  t.a.assign(r + 1, 0);
  t.b.assign(r + 1, 0);
  for (std::size_t row = 0; row <= r; ++row) {
    t.a[row] = conv[row][0];
    t.b[row] = d * conv[row][0];
    for (std::size_t i = 1; i <= r; ++i)
      t.b[row] -= static_cast<std::int64_t>(tower.centers[i - 1].multiplicity) * conv[row][i];
  }
  return t;
}

std::vector<std::int64_t> forward_a_vector(const BlowupTower& tower) {
  std::vector<std::int64_t> a{1};
  for (const auto& c : tower.centers) {
    std::int64_t v = c.on_strict_h ? a[0] : 0;
    for (std::size_t j : c.on_strict_e) v += a[j];
    a.push_back(v);
  }
  return a;
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> direct_orders(const BlowupTower& tower) {
  std::vector<std::int64_t> a{1}, b{static_cast<std::int64_t>(tower.map.degree())};
  for (const auto& c : tower.centers) {
    a.push_back(c.order_total_h);
    b.push_back(c.order_z_form);
  }
  return {a, b};
}

ExtRational d_ratio(const PullbackTable& table, unsigned degree) {
  Rational best = 0;
  for (std::size_t i = 0; i < table.a.size(); ++i) {
    if (table.b[i] < 0 || table.a[i] < 0) throw std::logic_error("pullback coefficients must be nonnegative");
    if (table.a[i] == 0) continue;
    if (table.b[i] == 0) return ExtRational::infinity();
    Rational q = make_rational(Integer(static_cast<long>(table.a[i])), Integer(static_cast<long>(table.b[i])));
    if (q > best) best = q;
  }
  return ExtRational(best * degree);
}

ExtRational d_ratio(const ProjMap& f, const ResolveOptions& options) {
  return d_ratio(pullback_table(resolve(f, options)), f.degree());
}

std::vector<std::pair<std::size_t, std::size_t>> intersection_graph(const BlowupTower& tower) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& c : tower.centers) {
    std::vector<std::size_t> through;
    if (c.on_strict_h) through.push_back(0);
    through.insert(through.end(), c.on_strict_e.begin(), c.on_strict_e.end());
    for (std::size_t i = 0; i < through.size(); ++i)
      for (std::size_t j = i + 1; j < through.size(); ++j) edges.erase({through[i], through[j]});
    for (std::size_t k : through) edges.insert({k, c.index});
  }
  return {edges.begin(), edges.end()};
}

std::string curve_name(std::size_t curve) { return curve == 0 ? "H_V" : "E" + std::to_string(curve); }

std::string configuration_diagram(const BlowupTower& tower) {
  const PullbackTable t = pullback_table(tower);
  const auto edges = intersection_graph(tower);
  std::ostringstream os;
  std::size_t width = std::max(curve_name(0).size(), curve_name(t.r).size());
  for (std::size_t c = 0; c <= t.r; ++c) {
    std::string name = curve_name(c);
    os << "  " << name << std::string(width - name.size(), ' ') << " a=" << t.a[c] << " b=" << t.b[c];
    if (c > 0) os << " m=" << tower.centers[c - 1].multiplicity;
    os << "  ";
    bool any = false;
    for (const auto& [p, q] : edges) {
      std::size_t other;
      if (p == c)
        other = q;
      else if (q == c)
        other = p;
      else
        continue;
      os << (any ? " " : "-- ") << curve_name(other);
      any = true;
    }
    if (!any) os << "(isolated)";
    os << '\n';
  }
  return os.str();
}

bool PropertyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
}

namespace {

std::string vec_str(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

PropertyReport check_tower_invariants(const BlowupTower& tower) {
  PropertyReport rep;
  const PullbackTable t = pullback_table(tower);
  const unsigned d = tower.map.degree();
  rep.checks.push_back({"a_0 = 1", t.a[0] == 1, "a = " + vec_str(t.a)});
  rep.checks.push_back({"b_0 = deg f", t.b[0] == static_cast<std::int64_t>(d), "b = " + vec_str(t.b)});
  bool nonneg = std::all_of(t.a.begin(), t.a.end(), [](auto v) { return v >= 0; }) &&
                std::all_of(t.b.begin(), t.b.end(), [](auto v) { return v >= 0; });
  rep.checks.push_back({"a, b nonnegative", nonneg, ""});

  ExtRational r = d_ratio(t, d);
  if (r.is_infinite()) {
    rep.checks.push_back({"minimality of r", true, "r = infinity"});
  } else {
    Rational scale = r.value() / d;
    bool dominates = true, attained = false;
    for (std::size_t i = 0; i <= t.r; ++i) {
      Rational lhs = scale * Rational(static_cast<long>(t.b[i]));
      if (lhs < t.a[i]) dominates = false;
      if (lhs == t.a[i] && t.a[i] != 0) attained = true;
    }
    rep.checks.push_back({"(r/d) b - a >= 0 with equality somewhere", dominates && attained, "r = " + r.str()});
  }

  bool conv_ok = true;
  for (std::size_t col = 0; col <= t.r; ++col) {
    bool positive = false;
    for (std::size_t row = 0; row <= t.r; ++row) {
      if (t.conversion[row][col] < 0) conv_ok = false;
      if (t.conversion[row][col] > 0) positive = true;
    }
    if (!positive) conv_ok = false;
  }
  rep.checks.push_back({"conversion matrix nonnegative, every column positive", conv_ok, ""});

  auto fwd = forward_a_vector(tower);
  rep.checks.push_back({"forward recursion a = conversion a", fwd == t.a, "forward " + vec_str(fwd)});
  auto [da, db] = direct_orders(tower);
  rep.checks.push_back({"chart orders agree with (a, b)", da == t.a && db == t.b,
                        "orders a " + vec_str(da) + " b " + vec_str(db)});
  return rep;
}

PropertyReport check_properties(const ProjMap& f, const std::optional<ProjMap>& g, const ResolveOptions& options) {
  PropertyReport rep;
  const ExtRational rf = d_ratio(f, options);
  const bool f_morphism = base_points_p2(f).is_morphism();
  rep.checks.push_back({"r(f) >= 1", rf >= ExtRational(1), "r(f) = " + rf.str()});
  rep.checks.push_back({"r(f) = 1 iff f is a morphism", (rf == ExtRational(1)) == f_morphism,
                        std::string("morphism: ") + (f_morphism ? "yes" : "no") + ", r(f) = " + rf.str()});
  if (!g) return rep;

  const ExtRational rg = d_ratio(*g, options);
  const ProjMap gf = compose(*g, f);
  const ExtRational rgf = d_ratio(gf, options);
  std::string witness = "r(f) = " + rf.str() + ", deg f = " + std::to_string(f.degree()) + "; r(g) = " + rg.str() +
                        ", deg g = " + std::to_string(g->degree()) + "; r(g∘f) = " + rgf.str() +
                        ", deg g∘f = " + std::to_string(gf.degree());
  bool bound = true;
  if (!rf.is_infinite() && !rg.is_infinite()) {
    if (rgf.is_infinite()) {
      bound = false;
    } else {
      Rational lhs = rgf.value() / gf.degree();
      Rational rhs = (rf.value() / f.degree()) * (rg.value() / g->degree());
      bound = lhs <= rhs;
      witness += "; " + to_string(lhs) + " <= " + to_string(rhs);
    }
  }
  rep.checks.push_back({"r(g∘f)/deg(g∘f) <= (r(f)/deg f)(r(g)/deg g)", bound, witness});
  if (base_points_p2(*g).is_morphism()) {
    bool same = rgf == rf && gf.degree() == f.degree() * g->degree();
    rep.checks.push_back({"g morphism => r(g∘f) = r(f)", same, witness});
  }
  return rep;
}

}  // namespace dratio
