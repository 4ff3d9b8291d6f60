#include "dratio/logsum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dratio {

LogSum& LogSum::add(const Rational& coef, const Integer& base) {
  if (base <= 0) throw std::domain_error("log of a non-positive integer");
  if (coef == 0 || base == 1) return *this;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), base,
                             [](const auto& t, const Integer& b) { return t.first < b; });
  if (it != terms_.end() && it->first == base) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {base, coef});
  }
  return *this;
}

LogSum operator+(LogSum a, const LogSum& b) {
  for (const auto& [base, c] : b.terms_) a.add(c, base);
  return a;
}

LogSum operator-(LogSum a, const LogSum& b) {
  for (const auto& [base, c] : b.terms_) a.add(-c, base);
  return a;
}

LogSum operator*(const Rational& c, LogSum a) {
  if (c == 0) return LogSum();
  for (auto& t : a.terms_) t.second *= c;
  return a;
}

double LogSum::value() const {
  double v = 0;
  for (const auto& [base, c] : terms_) v += c.get_d() * log_of(base);
  return v;
}

int LogSum::sign() const {
  if (terms_.empty()) return 0;
  // Fast path: the floating value is accurate to ~1e-15 relative to its scale.
  double v = 0, scale = 0;
  for (const auto& [base, c] : terms_) {
    double t = c.get_d() * log_of(base);
    v += t;
    scale += std::fabs(t);
  }
  if (std::fabs(v) > 1e-9 * (1.0 + scale)) return v > 0 ? 1 : -1;

  // Exact: scale to integer exponents and compare prod M_i^{e_i} over positive
  // and negative exponents.
  Integer den = 1;
  for (const auto& [base, c] : terms_) den = lcm(den, Integer(c.get_den()));
  Integer pos = 1, neg = 1;
  for (const auto& [base, c] : terms_) {
    Integer e = c.get_num() * (den / c.get_den());
    if (!e.fits_ulong_p() && !Integer(-e).fits_ulong_p()) throw std::overflow_error("exponent too large for exact comparison");
    if (e > 0)
      pos *= pow(base, e.get_ui());
    else
      neg *= pow(base, Integer(-e).get_ui());
  }
  return cmp(pos, neg) < 0 ? -1 : (pos == neg ? 0 : 1);
}

std::string LogSum::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [base, c] : terms_) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (mag != 1) s += to_string(mag) + "*";
    s += "log(" + to_string(base) + ")";
  }
  return s;
}

}  // namespace dratio
