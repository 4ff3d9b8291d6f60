// One PASS/FAIL line per acceptance criterion.
//
// Usage: acceptance [--known-red N,...]
// Exit status is 0 when the failing criteria are exactly the listed ones.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dratio/heights.hpp"
#include "dratio/monoid.hpp"
#include "dratio/parse.hpp"
#include "dratio/resolution.hpp"

using namespace dratio;

namespace {

using V = std::vector<std::int64_t>;
using Clock = std::chrono::steady_clock;

ProjMap amap(const std::vector<std::string>& comps) {
  std::vector<std::string> vars{"x", "y"};
  std::vector<MultiPoly> ps;
  for (const auto& c : comps) ps.push_back(parse_poly(c, vars));
  return homogenize_affine(ps);
}

ProjMap pmap(const std::vector<std::string>& forms) {
  std::vector<std::string> names{"X", "Y", "Z"};
  std::vector<MultiPoly> ps;
  for (const auto& f : forms) ps.push_back(parse_poly(f, names));
  return ProjMap::from_forms(ps);
}

std::string vec(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

// Both routes to the a-vector, plus the b-vector read off the charts, must agree with the table.
bool routes_agree(const BlowupTower& tower, const PullbackTable& t) {
  auto forward = forward_a_vector(tower);
  auto [ord_h, ord_z] = direct_orders(tower);
  return forward == t.a && ord_h == t.a && ord_z == t.b;
}

Outcome exact_tower(const ProjMap& f, const V& a, const V& b, const ExtRational& r) {
  auto tower = resolve(f);
  auto t = pullback_table(tower);
  ExtRational got = d_ratio(t, f.degree());
  bool ok = t.a == a && t.b == b && got == r && routes_agree(tower, t);
  return {ok, "a=" + vec(t.a) + " b=" + vec(t.b) + " r=" + got.str()};
}

Outcome criterion1() {
  auto t0 = Clock::now();
  Outcome o = exact_tower(amap({"x^3 + y", "x + y^2"}), {1, 1, 2, 3}, {3, 2, 4, 6}, Rational(3, 2));
  double s = seconds_since(t0);
  o.pass = o.pass && s < 5;
  char buf[64];
  std::snprintf(buf, sizeof buf, " in %.3fs", s);
  o.detail += buf;
  return o;
}

Outcome criterion2() { return exact_tower(amap({"x", "y^2"}), {1, 1, 2}, {2, 1, 2}, Rational(2)); }

Outcome criterion3() {
  ProjMap G = amap({"y", "x^2 + y"});
  ExtRational rG = d_ratio(G);
  ProjMap G2 = compose(G, G);
  bool forms = G2 == pmap({"X^2 + Y*Z", "X^2 + Y^2 + Y*Z", "Z^2"});
  bool empty = base_points_p2(G2).is_morphism();
  ExtRational rG2 = d_ratio(G2);
  return {rG == ExtRational(2) && forms && empty && rG2 == ExtRational(1),
          "r(G)=" + rG.str() + " G^2=" + G2.str() + " base locus " + (empty ? "empty" : "nonempty") +
              " r(G^2)=" + rG2.str()};
}

Outcome criterion4() {
  int good = 0, total = 0;
  std::string bad;
  for (int k = 2; k <= 5; ++k)
    for (int m = 1; m <= 3; ++m) {
      ++total;
      ProjMap f = pmap({"X^" + std::to_string(k * m), "Y^" + std::to_string((k - 1) * m) + "*Z^" + std::to_string(m),
                        "Z^" + std::to_string(k * m)});
      auto tower = resolve(f);
      auto t = pullback_table(tower);
      bool ok = d_ratio(t, f.degree()) == ExtRational(Rational(k, k - 1)) && routes_agree(tower, t) && t.r >= 1;
      for (std::size_t i = 1; i <= t.r; ++i)
        ok = ok && t.a[i] == static_cast<std::int64_t>(i) && t.b[i] == static_cast<std::int64_t>(i) * m * (k - 1);
      if (ok)
        ++good;
      else
        bad += " (k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
    }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " members exact" + bad};
}

Outcome criterion5() {
  // hand resolution of both maps: centers [1:0:0] (resp. [0:1:0]), then the
  // origin of the first chart, then t = -1 on E2
  const V a{1, 1, 2, 2}, b{2, 1, 2, 1};
  Outcome f = exact_tower(amap({"y", "x + y^2"}), a, b, ExtRational(4));
  Outcome g = exact_tower(amap({"y - x^2", "x"}), a, b, ExtRational(4));
  return {f.pass && g.pass, "f: " + f.detail + "; f^-1: " + g.detail + "; deg f * deg f^-1 = 4"};
}

Outcome criterion6() {
  std::vector<ProjMap> maps{amap({"x^3 + y", "x + y^2"}), amap({"x", "y^2"}), amap({"y", "x^2 + y"}),
                            amap({"y", "x + y^2"}), amap({"y - x^2", "x"}), amap({"x^2", "y^2"}),
                            pmap({"X^6", "Y^4*Z^2", "Z^6"}), pmap({"X^15", "Y^12*Z^3", "Z^15"})};
  std::mt19937_64 rng(12345);
  std::size_t towers = 0, extras = 0, failures = 0;
  std::string first_failure;
  auto check = [&](const BlowupTower& tower, const ExtRational& expected) {
    ++towers;
    auto rep = check_tower_invariants(tower);
    auto t = pullback_table(tower);
    bool ok = rep.all_passed() && d_ratio(t, tower.map.degree()) == expected;
    for (std::size_t i = 0; i <= t.r; ++i) {
      std::int64_t col = 0;
      for (std::size_t j = 0; j <= t.r; ++j) {
        ok = ok && t.conversion[j][i] >= 0;
        col += t.conversion[j][i];
      }
      ok = ok && col > 0;
    }
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = " first failure: " + tower.map.str();
    }
  };
  for (const auto& f : maps) {
    BlowupTower tower = resolve(f);
    const ExtRational r = d_ratio(pullback_table(tower), f.degree());
    check(tower, r);
    for (int attempt = 0, added = 0; !tower.charts.empty() && attempt < 100 && added < 6; ++attempt) {
      std::size_t chart = rng() % tower.charts.size();
      const auto& boundary = tower.charts[chart].boundary;
      if (boundary.empty()) continue;
      std::size_t curve = boundary[rng() % boundary.size()].first;
      auto pt = point_on_curve(tower.charts[chart], curve, Rational(static_cast<long>(rng() % 7) - 3));
      if (!pt) continue;
      try {
        tower = extra_blowup(tower, chart, *pt);
      } catch (const NotOnBoundary&) {
        continue;
      }
      ++added;
      ++extras;
      check(tower, r);
    }
  }
  return {failures == 0 && extras > 0, std::to_string(towers) + " towers (" + std::to_string(extras) +
                                           " with extra blowups), " + std::to_string(failures) + " failures" +
                                           first_failure};
}

Outcome criterion7() {
  std::vector<ProjMap> maps{amap({"x^3 + y", "x + y^2"}), amap({"x", "y^2"}), amap({"y", "x^2 + y"}),
                            amap({"y", "x + y^2"}), amap({"y - x^2", "x"}), amap({"x^2", "y^2"}),
                            pmap({"X^2 + Y*Z", "X^2 + Y^2 + Y*Z", "Z^2"})};
  bool ok = true;
  for (const auto& f : maps) {
    ExtRational r = d_ratio(f);
    bool morphism = base_points_p2(f).is_morphism();
    ok = ok && r >= ExtRational(1) && ((r == ExtRational(1)) == morphism);
  }
  const ProjMap sq = amap({"x^2", "y^2"});
  std::vector<std::pair<ProjMap, ProjMap>> pairs{
      {amap({"x^3 + y", "x + y^2"}), sq},          {amap({"x", "y^2"}), amap({"y", "x^2 + y"})},
      {amap({"y", "x^2 + y"}), amap({"y", "x^2 + y"})}, {amap({"y", "x + y^2"}), amap({"x", "y^2"})},
      {amap({"y", "x + y^2"}), amap({"y - x^2", "x"})}};
  std::size_t composed = 0;
  for (const auto& [f, g] : pairs) {
    auto rep = check_properties(f, g);
    ok = ok && rep.all_passed();
    ++composed;
  }
  ProjMap F = amap({"x^3 + y", "x + y^2"});
  ExtRational rgF = d_ratio(compose(sq, F));
  ok = ok && rgF == d_ratio(F);
  return {ok, std::to_string(maps.size()) + " maps, " + std::to_string(composed) +
                  " composition pairs; r(g o F)=" + rgF.str()};
}

Outcome criterion8() {
  auto t0 = Clock::now();
  ProjMap F0 = amap({"x", "y^2"});
  std::vector<Rational> base{Rational(0), Rational(0)}, dir{Rational(1), Rational(0)};
  std::vector<Integer> ts;
  for (long t = 1; t <= 10000; ++t) ts.emplace_back(t);
  auto rep = line_deficit(F0, base, dir, ts);
  bool exact = true;
  for (const auto& e : rep.entries) exact = exact && e.deficit == Rational(-1, 2) * LogSum::log(e.t);
  bool decreasing = true;
  const LineDeficitEntry* prev = nullptr;
  for (const auto& e : rep.entries) {
    if (mpz_popcount(e.t.get_mpz_t()) != 1) continue;
    if (prev) decreasing = decreasing && compare(e.deficit, prev->deficit) < 0;
    prev = &e;
  }
  double s = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "deficit(x) = -1/2 log x for x = 1..10^4: %s; decreasing on 2^k: %s; at 10^4: %.6f; %.3fs",
                exact ? "yes" : "no", decreasing ? "yes" : "no", rep.entries.back().deficit.value(), s);
  return {exact && decreasing && rep.meets_indeterminacy && s < 10, buf};
}

Outcome criterion9() {
  ProjMap F = amap({"x^3 + y", "x + y^2"});
  ExtRational r = d_ratio(F);
  auto stats = ratio_deficit(F, r.value(), {Integer(50), Integer(100)});
  const auto& a = stats.floors[0];
  const auto& b = stats.floors[1];
  int cmp = compare(b.min, a.min);
  std::ostringstream os;
  os.precision(8);
  os << "floor(log 50) = " << a.min.str() << " ~ " << a.min.value() << " at " << affine_str(a.argmin.affine())
     << "; floor(log 100) = " << b.min.str() << " ~ " << b.min.value() << " at " << affine_str(b.argmin.affine())
     << "; change " << (b.min - a.min).value();
  return {cmp >= 0, os.str()};
}

std::set<ProjPoint> preper_set(const ProjMap& f, long N, std::size_t& undecided) {
  auto s = preperiodic_search(f, HeightBound::of(N));
  undecided += s.undecided.size();
  std::set<ProjPoint> out;
  for (const auto& o : s.preperiodic)
    if (verify_preperiodic(f, o)) out.insert(o.start);
  return out;
}

Outcome criterion10() {
  ProjMap F = amap({"x^3 + y", "x + y^2"});
  std::size_t undecided = 0;
  auto a = preper_set(F, 20, undecided);
  auto b = preper_set(F, 40, undecided);
  bool same = a == b;

  ProjMap F0 = amap({"x", "y^2"});
  std::size_t und0 = 0;
  auto c = preper_set(F0, 20, und0);
  std::set<ProjPoint> oracle;
  for_each_affine_point(2, 20, [&](const ProjPoint& P) {
    Rational y = P.affine()[1];
    if (y == 0 || y == 1 || y == -1) oracle.insert(P);
  });
  std::string pts;
  for (const auto& p : a) pts += " " + affine_str(p.affine());
  return {same && undecided == 0 && und0 == 0 && c == oracle,
          "Pre(F) at log 20 and log 40:" + pts + " (" + (same ? "identical" : "different") + "), undecided " +
              std::to_string(undecided) + "; Pre(F0) at log 20 has " + std::to_string(c.size()) +
              " points, y in {0,1,-1} oracle has " + std::to_string(oracle.size())};
}

Outcome criterion11() {
  ProjMap G = amap({"y", "x^2 + y"});
  std::size_t undecided = 0;
  auto a = preper_set(G, 20, undecided);
  auto b = preper_set(compose(G, G), 20, undecided);
  return {a == b && undecided == 0, "|Pre(G)| = " + std::to_string(a.size()) + ", |Pre(G^2)| = " +
                                        std::to_string(b.size()) + ", " + (a == b ? "equal" : "different") +
                                        ", undecided " + std::to_string(undecided)};
}

Outcome criterion12() {
  PairConfig pair(amap({"y", "x + y^2"}), amap({"y - x^2", "x"}));
  Rational delta = pair.delta_s();
  bool identity = true;
  for (const auto& row : word_identity_check(12, pair.d1(), pair.d2(), pair.r())) {
    // oracle: sum of mu over words of length m is (1/d1 + 1/d2)^m
    Rational binom_side = pow(Rational(4, 5), static_cast<long>(row.m)) *
                          pow(Rational(1, pair.d1()) + Rational(1, pair.d2()), static_cast<long>(row.m));
    identity = identity && row.holds() && row.rhs == binom_side;
  }
  auto finite = [&](long N, std::size_t& undecided) {
    auto s = pre_phi_search(pair, HeightBound::of(N));
    undecided += s.undecided.size();
    std::set<ProjPoint> out;
    for (const auto& o : s.finite) out.insert(o.start);
    return out;
  };
  std::size_t undecided = 0;
  auto a = finite(20, undecided);
  auto b = finite(40, undecided);
  std::string pts;
  for (const auto& p : a) pts += " " + affine_str(p.affine());
  return {delta == Rational(4, 5) && identity && a == b, "delta_S = " + to_string(delta) + ", identity m<=12 " +
                                                             (identity ? "holds" : "fails") + ", Pre(Phi_S):" + pts +
                                                             (a == b ? " unchanged" : " changed") + " at log 40, undecided " +
                                                             std::to_string(undecided)};
}

Outcome criterion13() {
  ProjMap f = pmap({"X^2", "Y*Z", "Z^2"});
  ExtRational r = d_ratio(f);
  Rational lower = Rational(f.degree()) / r.value();
  ExpansionOptions opts;
  opts.windows = {{Integer(10), Integer(100)}, {Integer(100), Integer(10000)}};
  opts.lower_bound = lower;
  auto est = expansion_coefficient_estimate(f, opts);
  bool ok = true;
  std::ostringstream os;
  os.precision(10);
  os << "deg/r = " << to_string(lower) << ";";
  for (const auto& w : est.windows) {
    ok = ok && w.respects_lower_bound && w.min_ratio >= lower.get_d() - 1e-9;
    os << " [" << w.window.lo << "," << w.window.hi << "): min " << w.min_ratio << " over " << w.evaluated;
  }
  ok = ok && std::fabs(est.estimate() - 1.0) <= 0.05;
  return {ok, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known_red;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--known-red") {
      std::stringstream ss(argv[i + 1]);
      std::string item;
      while (std::getline(ss, item, ',')) known_red.insert(std::stoi(item));
    }

  std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, criterion1},  {2, criterion2},  {3, criterion3},   {4, criterion4},   {5, criterion5},
      {6, criterion6},  {7, criterion7},  {8, criterion8},   {9, criterion9},   {10, criterion10},
      {11, criterion11}, {12, criterion12}, {13, criterion13}};

  std::set<int> failed;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) failed.insert(id);
    std::cout << "[PRIMARY] criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
  }
  std::cout << (13 - failed.size()) << "/13 criteria pass" << std::endl;
  return failed == known_red ? 0 : 1;
}
