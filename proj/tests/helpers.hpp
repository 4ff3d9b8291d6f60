#pragma once

#include <string>
#include <vector>

#include "dratio/parse.hpp"
#include "dratio/projmap.hpp"

namespace testing {

inline dratio::MultiPoly poly(const std::string& text, std::vector<std::string> vars = {"x", "y"}) {
  return dratio::parse_poly(text, vars);
}

/// Affine polynomial map of A^n from component strings in x, y (or the given names).
inline dratio::ProjMap amap(const std::vector<std::string>& comps, std::vector<std::string> vars = {"x", "y"}) {
  std::vector<dratio::MultiPoly> ps;
  for (const auto& c : comps) ps.push_back(dratio::parse_poly(c, vars));
  return dratio::homogenize_affine(ps);
}

/// Projective map from homogeneous forms in X, Y, Z.
inline dratio::ProjMap pmap(const std::vector<std::string>& forms) {
  std::vector<std::string> names{"X", "Y", "Z"};
  std::vector<dratio::MultiPoly> ps;
  for (const auto& f : forms) ps.push_back(dratio::parse_poly(f, names));
  return dratio::ProjMap::from_forms(ps);
}

inline dratio::Rational q(const std::string& s) { return dratio::parse_rational(s); }

}  // namespace testing
