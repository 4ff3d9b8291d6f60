#include <doctest.h>

#include <set>

#include "dratio/monoid.hpp"
#include "helpers.hpp"

using namespace dratio;
using testing::amap;
using testing::q;

namespace {

// Binomial expansion of (1/d1 + 1/d2)^m, independent of word enumeration.
Rational mu_sum_oracle(unsigned m, unsigned d1, unsigned d2) {
  Rational sum = 0;
  Integer binom = 1;
  for (unsigned k = 0; k <= m; ++k) {
    sum += Rational(binom) / (pow(Integer(d1), k) * pow(Integer(d2), m - k));
    binom = binom * (m - k) / (k + 1);
  }
  return sum;
}

PairConfig henon_pair() { return PairConfig(amap({"y", "x + y^2"}), amap({"y - x^2", "x"})); }

}  // namespace

TEST_CASE("mu weights") {
  CHECK(mu_weight({1, 1, 2}, 2, 3) == q("1/12"));
  CHECK(mu_weight({}, 2, 3) == 1);
  CHECK(mu_weight({2}, 5, 7) == q("1/7"));
  CHECK_THROWS(mu_weight({3}, 2, 2));
}

TEST_CASE("delta_S") {
  CHECK(delta_s(2, 2, ExtRational(4)) == q("4/5"));
  CHECK(delta_s(2, 2, ExtRational::infinity()) == 1);
  CHECK(delta_s(3, 3, ExtRational(1)) == q("1/3"));
}

TEST_CASE("word identity") {
  CHECK(words_of_length(3).size() == 8);
  auto rows = word_identity_check(3, 2, 2, ExtRational(4));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].lhs == 1);
  CHECK(rows[0].rhs == 1);
  CHECK(rows[3].lhs == q("64/125"));
  for (const auto& r : rows) CHECK(r.holds());
  for (unsigned d1 : {1u, 2u, 3u})
    for (unsigned d2 : {2u, 5u})
      for (const auto& r : {ExtRational(2), ExtRational(q("7/3")), ExtRational::infinity()}) {
        auto check = word_identity_check(6, d1, d2, r);
        for (const auto& row : check) {
          CHECK(row.holds());
          Rational qq = r.is_infinite() ? Rational(1) : Rational(r.value() / (r.value() + 1));
          CHECK(row.rhs == pow(qq, static_cast<long>(row.m)) * mu_sum_oracle(row.m, d1, d2));
        }
      }
  CHECK_THROWS_AS(word_identity_check(13, 2, 2, ExtRational(4)), std::invalid_argument);
}

TEST_CASE("words compose with the leftmost letter applied last") {
  ProjMap f1 = amap({"x + 1", "y"});
  ProjMap f2 = amap({"x^2", "y"});
  ProjMap w = compose_word(f1, f2, {1, 2});  // f1(f2(P))
  std::vector<Rational> p{Rational(3), Rational(0)};
  CHECK(w.apply_affine(p)[0] == 10);
  CHECK(compose_word(f1, f2, {}) == ProjMap::identity(2));
}

TEST_CASE("pair configuration") {
  PairConfig pair = henon_pair();
  CHECK(pair.r1() == ExtRational(4));
  CHECK(pair.r2() == ExtRational(4));
  CHECK(pair.r1_source() == PairConfig::Source::computed);
  CHECK(pair.joint_regularity_verified());
  CHECK(pair.delta_s() == q("4/5"));

  ProjMap s = amap({"x - y^2", "y"});
  CHECK_THROWS_AS(PairConfig(s, s), NotJointlyRegular);

  std::vector<std::string> v{"x", "y", "w"};
  ProjMap h3 = amap({"y", "w", "x + y^2"}, v), h3inv = amap({"w - x^2", "x", "y"}, v);
  CHECK_THROWS_AS(PairConfig(h3, h3inv), DimensionUnsupported);
  PairConfig supplied(h3, h3inv, ExtRational(4), ExtRational(4));
  CHECK_FALSE(supplied.joint_regularity_verified());
  CHECK(supplied.r1_source() == PairConfig::Source::supplied);
}

TEST_CASE("two-map deficit") {
  PairConfig pair = henon_pair();
  auto stats = pair_deficit(pair, {Integer(5), Integer(10)});
  CHECK(compare(stats.floors[1].min, stats.floors[0].min) <= 0);
  CHECK(pair_deficit_at(pair, stats.floors[1].argmin) == stats.floors[1].min);

  // the non-jointly-regular pair f = (x - y^2, y) with itself fixes (x, 0), so
  // (1/d) h(f P) + (1/d) h(f P) - 2 h(P) = -h(x) is unbounded below
  ProjMap f = amap({"x - y^2", "y"});
  CHECK_THROWS_AS(PairConfig(f, f), NotJointlyRegular);
  for (long x : {7L, 50L, 1000L}) {
    std::vector<Rational> p{Rational(x), Rational(0)};
    ProjPoint P = ProjPoint::from_affine(p);
    LogSum d = Rational(2, 2) * weil_height(f.apply(P)).exact() - Rational(2) * weil_height(P).exact();
    CHECK(d == Rational(-1) * LogSum::log(x));
  }
}

TEST_CASE("Phi orbits") {
  PairConfig pair = henon_pair();
  auto pt = [](long x, long y) {
    std::vector<Rational> v{Rational(x), Rational(y)};
    return ProjPoint::from_affine(v);
  };
  auto o = phi_orbit(pair, pt(0, 0));
  CHECK(o.status == PhiOrbitStatus::finite);
  CHECK(o.points.size() == 1);
  CHECK(phi_orbit(pair, pt(1, 1)).status == PhiOrbitStatus::escaped);
  CHECK(phi_orbit(pair, pt(1, 1), {3, 64, 400}).status == PhiOrbitStatus::undecided);

  // two morphisms: Pre(Phi) is the intersection of the two preperiodic sets
  PairConfig morph(amap({"x^2", "y^2"}), amap({"y^2", "x^2"}));
  auto phi = pre_phi_search(morph, HeightBound::of(4));
  CHECK(phi.undecided.empty());
  auto pre = [](const ProjMap& f) {
    std::set<ProjPoint> out;
    for (const auto& r : preperiodic_search(f, HeightBound::of(4)).preperiodic) out.insert(r.start);
    return out;
  };
  auto a = pre(morph.f1()), b = pre(morph.f2());
  std::set<ProjPoint> both;
  for (const auto& p : a)
    if (b.count(p)) both.insert(p);
  std::set<ProjPoint> found;
  for (const auto& o2 : phi.finite) found.insert(o2.start);
  CHECK(found == both);
  // each finite orbit point is preperiodic for each generator
  for (const auto& o2 : phi.finite)
    for (const auto& f : {morph.f1(), morph.f2()}) CHECK(orbit(f, o2.start).status == OrbitStatus::preperiodic);
}

TEST_CASE("orbit closure does not depend on expansion order") {
  PairConfig morph(amap({"x^2", "y^2"}), amap({"y^2", "x^2"}));
  PairConfig swapped(amap({"y^2", "x^2"}), amap({"x^2", "y^2"}));
  std::vector<Rational> v{Rational(-1), Rational(0)};
  auto a = phi_orbit(morph, ProjPoint::from_affine(v));
  auto b = phi_orbit(swapped, ProjPoint::from_affine(v));
  CHECK(a.status == PhiOrbitStatus::finite);
  CHECK(a.points == b.points);
}
