#include "dratio/points.hpp"

#include <algorithm>
#include <stdexcept>

#include "dratio/parse.hpp"

namespace dratio {

ProjPoint ProjPoint::from_integers(std::vector<Integer> coords) {
  Integer g = 0;
  for (const auto& c : coords) g = gcd(g, c);
  if (g == 0) throw std::invalid_argument("the zero vector is not a projective point");
  auto first = std::find_if(coords.begin(), coords.end(), [](const Integer& c) { return c != 0; });
  if (*first < 0) g = -g;
  for (auto& c : coords) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  ProjPoint p;
  p.coords_ = std::move(coords);
  return p;
}

ProjPoint ProjPoint::from_rationals(std::span<const Rational> coords) {
  Integer l = 1;
  for (const auto& c : coords) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> ints;
  ints.reserve(coords.size());
  for (const auto& c : coords) ints.emplace_back(c.get_num() * (l / c.get_den()));
  return from_integers(std::move(ints));
}

ProjPoint ProjPoint::from_affine(std::span<const Rational> coords) {
  std::vector<Rational> full(coords.begin(), coords.end());
  full.emplace_back(1);
  return from_rationals(full);
}

AffinePoint ProjPoint::affine() const {
  if (!is_affine()) throw std::domain_error("point " + str() + " lies on the hyperplane at infinity");
  AffinePoint out;
  for (std::size_t i = 0; i + 1 < coords_.size(); ++i) out.push_back(make_rational(coords_[i], coords_.back()));
  return out;
}

Integer ProjPoint::max_abs() const {
  Integer m = 0;
  for (const auto& c : coords_)
    if (abs(c) > m) m = abs(c);
  return m;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  if (a.coords_.size() != b.coords_.size()) return a.coords_.size() < b.coords_.size();
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string ProjPoint::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ':';
    s += to_string(coords_[i]);
  }
  return s + "]";
}

std::string affine_str(std::span<const Rational> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += to_string(p[i]);
  }
  return s + ")";
}

AffinePoint parse_affine_point(const std::string& text) {
  std::string body = text;
  auto b = body.find_first_not_of(" \t");
  if (b != std::string::npos && body[b] == '(') {
    auto e = body.find_last_of(')');
    if (e == std::string::npos) throw std::invalid_argument("unbalanced parenthesis in point '" + text + "'");
    body = body.substr(b + 1, e - b - 1);
  }
  AffinePoint out;
  for (const auto& part : split_top_level(body)) out.push_back(parse_rational(part));
  return out;
}

}  // namespace dratio
