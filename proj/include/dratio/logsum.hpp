#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dratio/rational.hpp"

namespace dratio {

/// An exact real number of the form sum_i c_i * log(M_i) with rational c_i and
/// positive integers M_i. Height differences such as (r/d) h(f(P)) - h(P) are
/// values of this type, so comparisons between them are decided exactly.
class LogSum {
 public:
  LogSum() = default;
  static LogSum log(const Integer& base) { return LogSum().add(1, base); }

  /// Adds coef * log(base). base must be positive; log(1) terms are dropped.
  LogSum& add(const Rational& coef, const Integer& base);

  friend LogSum operator+(LogSum a, const LogSum& b);
  friend LogSum operator-(LogSum a, const LogSum& b);
  friend LogSum operator*(const Rational& c, LogSum a);

  /// Sorted by base, one entry per base, no zero coefficients.
  const std::vector<std::pair<Integer, Rational>>& terms() const { return terms_; }

  double value() const;
  /// Exact sign: -1, 0 or +1.
  int sign() const;
  friend int compare(const LogSum& a, const LogSum& b) { return (a - b).sign(); }
  friend bool operator==(const LogSum& a, const LogSum& b) { return compare(a, b) == 0; }

  /// Terms by increasing base, e.g. "-log(7) + 1/2*log(20)"; "0" for the empty sum.
  std::string str() const;

 private:
  std::vector<std::pair<Integer, Rational>> terms_;
};

}  // namespace dratio
