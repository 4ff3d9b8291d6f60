#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dratio/multipoly.hpp"
#include "dratio/points.hpp"

namespace dratio {

/// Rational self-map of P^n given by n+1 homogeneous forms in X_1..X_n, Z.
///
/// Always stored normalized: the forms share no nonconstant factor, all
/// coefficients are coprime integers, and the last nonzero form has a positive
/// leading coefficient. The last slot is the hyperplane coordinate Z, so the
/// distinguished hyperplane is H = {Z = 0}.
class ProjMap {
 public:
  /// Validates (equal degree, homogeneous, not all zero) and normalizes.
  static ProjMap from_forms(std::vector<MultiPoly> forms);
  static ProjMap identity(std::size_t n);

  std::size_t dim() const { return forms_.size() - 1; }
  unsigned degree() const { return degree_; }
  const std::vector<MultiPoly>& forms() const { return forms_; }

  /// Image of a point, canonicalized. Throws std::domain_error at an
  /// indeterminacy point.
  ProjPoint apply(const ProjPoint& p) const;
  /// Image of an affine point, as an affine point. Throws when the image lies on H.
  AffinePoint apply_affine(std::span<const Rational> p) const;

  /// True when the last form is c * Z^d, i.e. the map restricts to a polynomial map of A^n.
  bool is_affine_polynomial() const;
  /// Dehomogenize at Z = 1, dividing by the last form. Requires is_affine_polynomial().
  std::vector<MultiPoly> affine_components() const;

  std::string str() const;
  std::string affine_str(std::span<const std::string> names) const;

  friend bool operator==(const ProjMap&, const ProjMap&) = default;

 private:
  std::vector<MultiPoly> forms_;
  unsigned degree_ = 0;
};

/// Homogeneous coordinate names: X, Y, Z for the plane and X1..Xn, Z otherwise.
std::vector<std::string> projective_names(std::size_t n);
/// Affine coordinate names: x, y for the plane, x, y, z for A^3 and x1..xn otherwise.
std::vector<std::string> affine_names(std::size_t n);

/// (f_1, ..., f_n) -> [Z^d f_1(X/Z), ..., Z^d f_n(X/Z), Z^d] with d the largest degree.
ProjMap homogenize_affine(std::span<const MultiPoly> components);

/// f ∘ g: substitute the forms of g into those of f, then normalize.
ProjMap compose(const ProjMap& f, const ProjMap& g);

struct BasePoint {
  ProjPoint point;          // lies on Z = 0
  unsigned multiplicity{};  // min order of vanishing of the local forms
};

struct BasePointReport {
  std::vector<BasePoint> rational_points;
  /// Leftover binary form in (X, Y) with no rational root, when nonconstant.
  std::optional<MultiPoly> irrational_factor;

  bool is_morphism() const { return rational_points.empty() && !irrational_factor; }
};

class DimensionUnsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Base locus of a plane map. Only Z = 0 is searched; maps whose base locus
/// leaves H are outside the supported class.
BasePointReport base_points_p2(const ProjMap& f);

/// Local forms of a plane map around a point of H: dehomogenized in the chart
/// X = 1 (when X != 0) or Y = 1, translated so the point is the origin.
/// Local coordinates are (the remaining X or Y coordinate, z); H is {z = 0}.
std::vector<MultiPoly> local_forms_at(const ProjMap& f, const ProjPoint& point);

/// Base loci disjoint: no shared rational base point and coprime irrational factors.
bool is_jointly_regular(const ProjMap& f1, const ProjMap& f2);

}  // namespace dratio
