#include <doctest.h>

#include <random>

#include "dratio/resolution.hpp"
#include "helpers.hpp"

using namespace dratio;
using testing::amap;
using testing::pmap;
using testing::q;

namespace {

using V = std::vector<std::int64_t>;

void require_invariants(const BlowupTower& t) {
  auto rep = check_tower_invariants(t);
  for (const auto& c : rep.checks) {
    INFO(c.name << ": " << c.witness);
    CHECK(c.passed);
  }
}

}  // namespace

TEST_CASE("F = (x^3 + y, x + y^2)") {
  auto tower = resolve(amap({"x^3 + y", "x + y^2"}));
  auto t = pullback_table(tower);
  CHECK(t.r == 3);
  CHECK(t.a == V{1, 1, 2, 3});
  CHECK(t.b == V{3, 2, 4, 6});
  CHECK(d_ratio(t, 3) == ExtRational(q("3/2")));
  require_invariants(tower);
}

TEST_CASE("F0 = (x, y^2)") {
  auto tower = resolve(amap({"x", "y^2"}));
  auto t = pullback_table(tower);
  CHECK(t.a == V{1, 1, 2});
  CHECK(t.b == V{2, 1, 2});
  CHECK(d_ratio(t, 2) == ExtRational(2));
  require_invariants(tower);
}

TEST_CASE("G = (y, x^2 + y) needs two blowups") {
  auto tower = resolve(amap({"y", "x^2 + y"}));
  CHECK(tower.size() == 2);
  CHECK(d_ratio(pullback_table(tower), 2) == ExtRational(2));
  require_invariants(tower);
  CHECK(d_ratio(pmap({"X^2 + Y*Z", "X^2 + Y^2 + Y*Z", "Z^2"})) == ExtRational(1));
}

TEST_CASE("monomial family") {
  for (int k = 2; k <= 5; ++k)
    for (int m = 1; m <= 3; ++m) {
      std::string X = "X^" + std::to_string(k * m);
      std::string Y = "Y^" + std::to_string((k - 1) * m) + "*Z^" + std::to_string(m);
      std::string Z = "Z^" + std::to_string(k * m);
      auto tower = resolve(pmap({X, Y, Z}));
      auto t = pullback_table(tower);
      CAPTURE(k);
      CAPTURE(m);
      for (std::size_t i = 1; i <= t.r; ++i) {
        CHECK(t.a[i] == static_cast<std::int64_t>(i));
        CHECK(t.b[i] == static_cast<std::int64_t>(i) * m * (k - 1));
      }
      CHECK(d_ratio(t, k * m) == ExtRational(Rational(k, k - 1)));
      require_invariants(tower);
    }
}

TEST_CASE("Henon map and its inverse") {
  // hand resolution: three centers, the last at t = -1 on E2
  for (auto f : {amap({"y", "x + y^2"}), amap({"y - x^2", "x"})}) {
    auto tower = resolve(f);
    auto t = pullback_table(tower);
    CHECK(t.a == V{1, 1, 2, 2});
    CHECK(t.b == V{2, 1, 2, 1});
    CHECK(d_ratio(t, 2) == ExtRational(4));
    require_invariants(tower);
  }
}

TEST_CASE("unsupported inputs") {
  CHECK_THROWS_AS(resolve(amap({"x^3 + x*y^2 + y", "x^2*y + y^3 + x"})), IrrationalBasePoint);
  std::vector<std::string> v{"x", "y", "w"};
  CHECK_THROWS_AS(resolve(amap({"y", "w", "x"}, v)), DimensionUnsupported);
  CHECK_THROWS_AS(resolve(amap({"x^3 + y", "x + y^2"}), {2}), TowerBudgetExceeded);
}

TEST_CASE("morphisms resolve with no blowups") {
  auto tower = resolve(amap({"x^2", "y^2"}));
  CHECK(tower.size() == 0);
  auto t = pullback_table(tower);
  CHECK(d_ratio(t, 2) == ExtRational(1));
}

TEST_CASE("extra blowups leave r unchanged") {
  std::mt19937 rng(2024);
  std::vector<ProjMap> maps{amap({"x^3 + y", "x + y^2"}), amap({"x", "y^2"}), amap({"y", "x^2 + y"}),
                            amap({"y", "x + y^2"})};
  for (const auto& f : maps) {
    BlowupTower tower = resolve(f);
    const ExtRational r = d_ratio(pullback_table(tower), f.degree());
    int added = 0;
    for (int attempt = 0; attempt < 60 && added < 4; ++attempt) {
      std::size_t chart = rng() % tower.charts.size();
      const auto& boundary = tower.charts[chart].boundary;
      if (boundary.empty()) continue;
      std::size_t curve = boundary[rng() % boundary.size()].first;
      auto pt = point_on_curve(tower.charts[chart], curve, Rational(static_cast<long>(rng() % 5) - 2));
      if (!pt) continue;
      try {
        tower = extra_blowup(tower, chart, *pt);
      } catch (const NotOnBoundary&) {
        continue;
      }
      ++added;
      CHECK(d_ratio(pullback_table(tower), f.degree()) == r);
      require_invariants(tower);
    }
    CHECK(added > 0);
  }
}

TEST_CASE("properties of r") {
  auto rep = check_properties(amap({"x^3 + y", "x + y^2"}), amap({"x^2", "y^2"}));
  for (const auto& c : rep.checks) {
    INFO(c.name << ": " << c.witness);
    CHECK(c.passed);
  }
  CHECK(rep.all_passed());
  CHECK(d_ratio(compose(amap({"x^2", "y^2"}), amap({"x^3 + y", "x + y^2"}))) == ExtRational(q("3/2")));
}

TEST_CASE("configuration diagram lists every curve") {
  auto text = configuration_diagram(resolve(amap({"x^3 + y", "x + y^2"})));
  for (const char* name : {"H_V", "E1", "E2", "E3"}) CHECK(text.find(name) != std::string::npos);
  auto edges = intersection_graph(resolve(amap({"x^3 + y", "x + y^2"})));
  CHECK(edges.size() == 3);
}
