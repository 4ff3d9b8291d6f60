#include "dratio/heights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <regex>
#include <stdexcept>

namespace dratio {

HeightValue weil_height(const ProjPoint& p) { return {p.max_abs()}; }

HeightValue weil_height(std::span<const Rational> affine) { return weil_height(ProjPoint::from_affine(affine)); }

HeightBound HeightBound::parse(const std::string& text) {
  static const std::regex log_form(R"(\s*log\s*\(?\s*([0-9]+)\s*\)?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, log_form)) {
    Integer n(m[1].str(), 10);
    if (n < 1) throw std::invalid_argument("height bound must be at least log(1)");
    return {n};
  }
  std::size_t used = 0;
  double b = std::stod(text, &used);
  if (used != text.size() || !(b >= 0)) throw std::invalid_argument("bad height bound '" + text + "'");
  // exp(B) may land a hair below an integer; nudge before flooring
  double e = std::floor(std::exp(b) * (1 + 1e-12));
  return {Integer(e)};
}

void for_each_affine_point(std::size_t n, const Integer& bound, const std::function<void(const ProjPoint&)>& visit) {
  if (!bound.fits_slong_p()) throw std::invalid_argument("height bound too large to enumerate");
  const long N = bound.get_si();
  if (N < 1) return;
  std::vector<long> a(n, -N);
  std::vector<Integer> coords(n + 1);
  for (long c = 1; c <= N; ++c) {
    std::fill(a.begin(), a.end(), -N);
    for (;;) {
      long g = c;
      for (long v : a) g = std::gcd(g, v);
      if (g == 1) {
        for (std::size_t i = 0; i < n; ++i) coords[i] = a[i];
        coords[n] = c;
        visit(ProjPoint::from_integers(coords));
      }
      std::size_t k = n;
      while (k > 0 && a[k - 1] == N) a[--k] = -N;
      if (k == 0) break;
      ++a[k - 1];
    }
  }
}

std::vector<ProjPoint> affine_points_up_to(std::size_t n, const Integer& bound) {
  std::vector<ProjPoint> out;
  for_each_affine_point(n, bound, [&](const ProjPoint& p) { out.push_back(p); });
  return out;
}

std::string to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::preperiodic:
      return "preperiodic";
    case OrbitStatus::escaped:
      return "escaped";
    case OrbitStatus::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

namespace {

Integer escape_cap(unsigned digits) { return pow(Integer(10), digits); }

ProjPoint step_affine(const ProjMap& f, const ProjPoint& p) {
  ProjPoint q = f.apply(p);
  if (!q.is_affine()) throw std::domain_error("iterate " + q.str() + " of " + p.str() + " lies on H");
  return q;
}

}  // namespace

OrbitRecord orbit(const ProjMap& f, const ProjPoint& start, const OrbitOptions& options) {
  if (!start.is_affine()) throw std::invalid_argument("orbit start must be an affine point");
  const Integer cap = escape_cap(options.escape_digits);
  OrbitRecord rec;
  rec.start = start;
  std::vector<ProjPoint> traj{start};
  rec.heights.push_back(weil_height(start));
  for (std::size_t step = 1; step <= options.budget; ++step) {
    ProjPoint next = step_affine(f, traj.back());
    rec.heights.push_back(weil_height(next));
    rec.steps = step;
    for (std::size_t j = 0; j < traj.size(); ++j) {
      if (traj[j] == next) {
        rec.status = OrbitStatus::preperiodic;
        rec.tail = j;
        rec.period = step - j;
        return rec;
      }
    }
    if (rec.heights.back().max_abs > cap) {
      rec.status = OrbitStatus::escaped;
      return rec;
    }
    traj.push_back(std::move(next));
  }
  rec.status = OrbitStatus::budget_exhausted;
  return rec;
}

bool verify_preperiodic(const ProjMap& f, const OrbitRecord& record) {
  if (record.status != OrbitStatus::preperiodic || record.period == 0) return false;
  ProjPoint p = record.start;
  for (std::size_t i = 0; i < record.tail; ++i) p = step_affine(f, p);
  ProjPoint q = p;
  for (std::size_t i = 0; i < record.period; ++i) q = step_affine(f, q);
  return p == q;
}

PreperiodicSearch preperiodic_search(const ProjMap& f, const HeightBound& bound, const OrbitOptions& options) {
  PreperiodicSearch out;
  for_each_affine_point(f.dim(), bound.max_abs, [&](const ProjPoint& p) {
    ++out.total;
    OrbitRecord rec = orbit(f, p, options);
    switch (rec.status) {
      case OrbitStatus::preperiodic:
        out.preperiodic.push_back(std::move(rec));
        break;
      case OrbitStatus::escaped:
        ++out.escaped;
        break;
      case OrbitStatus::budget_exhausted:
        out.undecided.push_back(p);
        break;
    }
  });
  return out;
}

bool DeficitStats::stabilized() const {
  if (floors.size() < 2) return false;
  return compare(floors[floors.size() - 1].min, floors[floors.size() - 2].min) == 0;
}

DeficitStats deficit_floors(std::size_t n, std::vector<Integer> bounds,
                            const std::function<LogSum(const ProjPoint&)>& deficit) {
  if (bounds.empty()) throw std::invalid_argument("no height bounds given");
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  // bucket k holds points with bounds[k-1] < M <= bounds[k]
  std::vector<std::optional<DeficitFloor>> bucket(bounds.size());
  std::vector<std::size_t> counts(bounds.size(), 0);
  for_each_affine_point(n, bounds.back(), [&](const ProjPoint& p) {
    Integer m = p.max_abs();
    std::size_t k = std::lower_bound(bounds.begin(), bounds.end(), m) - bounds.begin();
    ++counts[k];
    LogSum d = deficit(p);
    auto& slot = bucket[k];
    if (!slot || compare(d, slot->min) < 0) slot = DeficitFloor{bounds[k], std::move(d), p, 0};
  });

  DeficitStats stats;
  std::optional<DeficitFloor> running;
  std::size_t count = 0;
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    count += counts[k];
    if (bucket[k] && (!running || compare(bucket[k]->min, running->min) < 0)) running = bucket[k];
    if (!running) throw std::invalid_argument("no points below height bound " + to_string(bounds[k]));
    DeficitFloor floor = *running;
    floor.bound = bounds[k];
    floor.count = count;
    stats.floors.push_back(std::move(floor));
  }
  return stats;
}

LogSum ratio_deficit_at(const ProjMap& f, const Rational& r, const ProjPoint& p) {
  LogSum d = (r / f.degree()) * weil_height(f.apply(p)).exact();
  return d - weil_height(p).exact();
}

DeficitStats ratio_deficit(const ProjMap& f, const Rational& r, std::vector<Integer> bounds) {
  return deficit_floors(f.dim(), std::move(bounds),
                        [&](const ProjPoint& p) { return ratio_deficit_at(f, r, p); });
}

bool LineDeficitReport::strictly_decreasing() const {
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (compare(entries[i].deficit, entries[i - 1].deficit) >= 0) return false;
  return true;
}

LineDeficitReport line_deficit(const ProjMap& f, std::span<const Rational> base,
                                         std::span<const Rational> direction, std::span<const Integer> parameters) {
  const std::size_t n = f.dim();
  if (base.size() != n || direction.size() != n) throw std::invalid_argument("line data has wrong dimension");
  std::vector<Rational> at_inf(direction.begin(), direction.end());
  at_inf.emplace_back(0);
  LineDeficitReport rep;
  rep.direction_at_infinity = ProjPoint::from_rationals(at_inf);
  std::vector<Rational> pt(n);
  for (std::size_t i = 0; i < n; ++i) pt[i] = Rational(rep.direction_at_infinity[i]);
  pt.emplace_back(0);
  rep.meets_indeterminacy = std::all_of(f.forms().begin(), f.forms().end(), [&](const MultiPoly& F) {
    return F.evaluate(std::span<const Rational>(pt)) == 0;
  });

  const Rational inv_d = Rational(1) / f.degree();
  AffinePoint p(n);
  for (const auto& t : parameters) {
    for (std::size_t i = 0; i < n; ++i) p[i] = base[i] + Rational(t) * direction[i];
    ProjPoint P = ProjPoint::from_affine(p);
    LogSum d = inv_d * weil_height(f.apply(P)).exact() - weil_height(P).exact();
    rep.entries.push_back({t, std::move(P), std::move(d)});
  }
  return rep;
}

namespace {

struct WindowTracker {
  const ProjMap& f;
  const ExpansionOptions& opts;
  ExpansionWindowResult& out;
  bool any = false;

  void visit(const ProjPoint& p) {
    Integer m = p.max_abs();
    if (m < out.window.lo || m >= out.window.hi || m <= 1) return;
    ProjPoint image = f.apply(p);
    double ratio = log_of(image.max_abs()) / log_of(m);
    ++out.evaluated;
    if (!any || ratio < out.min_ratio) {
      out.min_ratio = ratio;
      out.argmin = p;
      any = true;
    }
    if (opts.lower_bound) {
      LogSum gap = weil_height(image).exact() - (*opts.lower_bound) * weil_height(p).exact();
      if (gap.sign() < 0) out.respects_lower_bound = false;
    }
  }
};

}  // namespace

ExpansionEstimate expansion_coefficient_estimate(const ProjMap& f, const ExpansionOptions& options) {
  if (options.windows.empty()) throw std::invalid_argument("no height windows given");
  const std::size_t n = f.dim();
  std::mt19937_64 rng(options.seed);
  ExpansionEstimate est;
  for (const auto& w : options.windows) {
    if (w.lo >= w.hi || w.hi <= 2) throw std::invalid_argument("empty height window [" + to_string(w.lo) + ", " + to_string(w.hi) + ")");
    if (!w.hi.fits_slong_p()) throw std::invalid_argument("height window too large");
    ExpansionWindowResult res;
    res.window = w;
    WindowTracker tracker{f, options, res};
    const long hi = w.hi.get_si() - 1;  // largest admissible max |coordinate|

    double tuples = std::pow(2.0 * hi + 1, static_cast<double>(n)) * hi;
    if (tuples <= static_cast<double>(options.exhaustive_limit)) {
      res.exhaustive = true;
      for_each_affine_point(n, Integer(hi), [&](const ProjPoint& p) { tracker.visit(p); });
    } else {
      auto uniform = [&](long lo_v, long hi_v) {
        return lo_v + static_cast<long>(rng() % static_cast<std::uint64_t>(hi_v - lo_v + 1));
      };
      auto draw = [&](std::optional<std::pair<std::size_t, Rational>> fixed) {
        std::size_t accepted = 0;
        for (std::size_t attempt = 0; attempt < 20 * options.samples_per_family && accepted < options.samples_per_family;
             ++attempt) {
          long c = uniform(1, hi);
          std::vector<Integer> coords(n + 1);
          Integer den = fixed ? Integer(fixed->second.get_den()) : Integer(1);
          for (std::size_t i = 0; i < n; ++i) coords[i] = den * uniform(-hi, hi);
          coords[n] = den * c;
          if (fixed) coords[fixed->first] = fixed->second.get_num() * c;
          ProjPoint p = ProjPoint::from_integers(std::move(coords));
          Integer m = p.max_abs();
          if (m < w.lo || m >= w.hi || m <= 1) continue;
          tracker.visit(p);
          ++accepted;
        }
      };
      draw(std::nullopt);
      const Rational alphas[] = {Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(2), Rational(-1, 2)};
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& alpha : alphas) draw(std::make_pair(i, alpha));
    }
    if (res.evaluated == 0) throw std::invalid_argument("no points found in window [" + to_string(w.lo) + ", " + to_string(w.hi) + ")");
    est.windows.push_back(std::move(res));
  }
  return est;
}

}  // namespace dratio
