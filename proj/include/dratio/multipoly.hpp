#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dratio/rational.hpp"

namespace dratio {

/// One exponent per variable.
using Exponents = std::vector<unsigned>;

/// Graded-lexicographic order, largest first: higher total degree wins,
/// ties broken lexicographically on the exponent vector.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q.
///
/// The term map never stores a zero coefficient, so two polynomials are equal
/// exactly when their term maps are equal. Variable names are not part of the
/// value; they are supplied when parsing and printing.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(Exponents exps, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_homogeneous() const;

  /// -1 for the zero polynomial.
  long total_degree() const;
  unsigned degree_in(std::size_t var) const;

  /// Minimum total degree of a term; nullopt stands for +infinity (zero polynomial).
  std::optional<unsigned> order_at_origin() const;

  Rational coefficient(const Exponents& exps) const;
  Rational constant_term() const;
  /// Leading term in grlex order. Precondition: nonzero.
  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned exp) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Evaluation at an integer point; exact, returns a rational in general.
  Rational evaluate(std::span<const Integer> point) const;

  /// Replace variable i by images[i]; all images share one variable count,
  /// which becomes the variable count of the result.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  /// Fix one variable to a value; the variable count is unchanged.
  MultiPoly set_variable(std::size_t var, const Rational& value) const;
  /// p(x + shift).
  MultiPoly translate(std::span<const Rational> shift) const;
  /// Re-index variables: variable i becomes variable mapping[i] of a ring with new_nvars variables.
  MultiPoly remap(std::size_t new_nvars, std::span<const std::size_t> mapping) const;
  MultiPoly homogeneous_component(unsigned degree) const;

  /// Positive rational c such that p / c has coprime integer coefficients,
  /// signed so that the leading coefficient of p / c is positive. Zero for zero.
  Rational content() const;
  /// p / content(); the zero polynomial maps to itself.
  MultiPoly primitive_part() const;
  /// True when every coefficient is an integer.
  bool has_integer_coefficients() const;

  /// Terms printed in grlex order, e.g. "2*x*y - 1/2".
  std::string to_string(std::span<const std::string> names) const;

 private:
  void add_term(const Exponents& exps, const Rational& c);

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Quotient when q divides p exactly, nullopt otherwise. q must be nonzero.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);

/// Greatest common divisor, normalized by primitive_part(); gcd(p, 0) is the
/// normalized p and gcd(0, 0) is 0.
MultiPoly gcd_poly(const MultiPoly& p, const MultiPoly& q);

inline std::optional<unsigned> order_at_origin(const MultiPoly& p) { return p.order_at_origin(); }

/// Default variable names x0, x1, ... for diagnostics.
std::vector<std::string> default_names(std::size_t nvars);

}  // namespace dratio
