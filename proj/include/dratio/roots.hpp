#pragma once

#include <vector>

#include "dratio/multipoly.hpp"
#include "dratio/points.hpp"

namespace dratio {

struct BinaryRoot {
  ProjPoint point;  // [x : y]
  unsigned multiplicity = 0;
};

/// Linear factors over Q of a binary form together with what is left over.
/// The product of (y0*X - x0*Y)^mult over the roots times `remainder` equals
/// the input up to a nonzero scalar; `remainder` has no rational root and is
/// constant exactly when the form splits over Q.
struct BinaryFactorization {
  std::vector<BinaryRoot> roots;
  MultiPoly remainder;
};

/// Input: a nonzero homogeneous form in two variables (X, Y).
BinaryFactorization rational_roots_binary_form(const MultiPoly& form);

/// Distinct rational roots of a polynomial in which only `var` occurs.
std::vector<Rational> rational_roots_univariate(const MultiPoly& p, std::size_t var);

/// All positive divisors, ascending. Trial division; fine for desk-sized inputs.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace dratio
