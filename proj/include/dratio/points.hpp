#pragma once

#include <span>
#include <string>
#include <vector>

#include "dratio/rational.hpp"

namespace dratio {

using AffinePoint = std::vector<Rational>;

/// A point of projective space over Q in canonical form: coprime integer
/// coordinates whose first nonzero entry is positive.
class ProjPoint {
 public:
  ProjPoint() = default;

  /// Throws std::invalid_argument for the zero vector.
  static ProjPoint from_integers(std::vector<Integer> coords);
  static ProjPoint from_rationals(std::span<const Rational> coords);
  /// (x_1, ..., x_n) -> [x_1 : ... : x_n : 1].
  static ProjPoint from_affine(std::span<const Rational> coords);

  const std::vector<Integer>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  bool is_affine() const { return !coords_.empty() && coords_.back() != 0; }
  /// Dehomogenize by the last coordinate. Throws when the point lies on Z = 0.
  AffinePoint affine() const;
  /// max |coordinate|; the multiplicative height.
  Integer max_abs() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

  /// "[a:b:c]"
  std::string str() const;

 private:
  std::vector<Integer> coords_;
};

std::string affine_str(std::span<const Rational> p);
/// Parses "x,y" (entries may be fractions) into an affine point.
AffinePoint parse_affine_point(const std::string& text);

}  // namespace dratio
