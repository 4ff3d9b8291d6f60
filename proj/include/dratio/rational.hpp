#pragma once

// Exact scalars. Rational is GMP's mpq_class, which keeps every value in
// canonical form (gcd(num, den) = 1, den > 0) after each arithmetic step.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dratio {

using Integer = mpz_class;
using Rational = mpq_class;

/// Build a canonical rational from a numerator/denominator pair.
Rational make_rational(const Integer& num, const Integer& den);

/// Parse "p" or "p/q" (optional sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, long exp);

/// Natural logarithm of a positive integer of any size.
double log_of(const Integer& z);

/// A value in Q ∪ {+∞}. Used for D-ratios, which may be infinite.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational v) : value_(std::move(v)) {}  // NOLINT: implicit by intent
  ExtRational(long v) : value_(v) {}                 // NOLINT

  static ExtRational infinity() {
    ExtRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const;  // throws std::logic_error when infinite
  double to_double() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

  /// "p/q", "p" or "infinity".
  std::string str() const;
  /// Accepts what str() produces, plus "inf".
  static ExtRational parse(std::string_view text);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& r);

}  // namespace dratio
