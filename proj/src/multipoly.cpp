#include "dratio/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dratio {

namespace {

unsigned exponent_sum(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomials live in rings of different size");
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = exponent_sum(a), db = exponent_sum(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(Exponents exps, const Rational& c) {
  MultiPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exponent_sum(terms_.begin()->first) == 0);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = exponent_sum(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return exponent_sum(t.first) == d; });
}

long MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // grlex puts the largest total degree first
  return static_cast<long>(exponent_sum(terms_.begin()->first));
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::optional<unsigned> MultiPoly::order_at_origin() const {
  if (terms_.empty()) return std::nullopt;
  return exponent_sum(terms_.rbegin()->first);
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

const Exponents& MultiPoly::leading_exponents() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_ring(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_ring(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  MultiPoly out(a.nvars_);
  Exponents e(a.nvars_);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      out.add_term(e, prod);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned exp) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (exp > 0) {
    if (exp & 1u) result *= base;
    exp >>= 1;
    if (exp > 0) base = base * base;
  }
  return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) t *= dratio::pow(point[i], static_cast<long>(e[i]));
    sum += t;
  }
  return sum;
}

Rational MultiPoly::evaluate(std::span<const Integer> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational sum = 0;
  Integer mono;
  for (const auto& [e, c] : terms_) {
    mono = 1;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) mono *= dratio::pow(point[i], e[i]);
    sum += c * mono;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != nvars_) throw std::invalid_argument("substitution needs one image per variable");
  std::size_t target = images.empty() ? 0 : images[0].nvars();
  for (const auto& img : images)
    if (img.nvars() != target) throw std::invalid_argument("substitution images disagree on ring size");
  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MultiPoly out(target);
  if (nvars_ == 0) {
    if (!terms_.empty()) out = constant(target, terms_.begin()->second);
    return out;
  }
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) t *= power(i, e[i]);
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::set_variable(std::size_t var, const Rational& value) const {
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    out.add_term(f, c * dratio::pow(value, static_cast<long>(e[var])));
  }
  return out;
}

MultiPoly MultiPoly::translate(std::span<const Rational> shift) const {
  if (shift.size() != nvars_) throw std::invalid_argument("shift has wrong dimension");
  if (std::all_of(shift.begin(), shift.end(), [](const Rational& s) { return s == 0; })) return *this;
  std::vector<MultiPoly> images;
  images.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    images.push_back(variable(nvars_, i) + constant(nvars_, shift[i]));
  return substitute(images);
}

MultiPoly MultiPoly::remap(std::size_t new_nvars, std::span<const std::size_t> mapping) const {
  if (mapping.size() != nvars_) throw std::invalid_argument("remap needs one target per variable");
  MultiPoly out(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents f(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (mapping[i] >= new_nvars) throw std::out_of_range("remap target out of range");
      f[mapping[i]] += e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::homogeneous_component(unsigned degree) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (exponent_sum(e) == degree) out.terms_.emplace(e, c);
  return out;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 0;
  Integer g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    g = gcd(g, Integer(c.get_num()));
    l = lcm(l, Integer(c.get_den()));
  }
  Rational out = make_rational(g, l);
  if (leading_coefficient() < 0) out = -out;
  return out;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / content();
  return *this * inv;
}

bool MultiPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (names.size() < nvars_) throw std::invalid_argument("not enough variable names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool is_const = exponent_sum(e) == 0;
    bool wrote = false;
    if (mag != 1 || is_const) {
      os << dratio::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nvars; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  require_same_ring(p, q);
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  MultiPoly quotient(p.nvars());
  MultiPoly rest = p;
  const Exponents& lq = q.leading_exponents();
  const Rational& cq = q.leading_coefficient();
  Exponents shift(p.nvars());
  while (!rest.is_zero()) {
    const Exponents& lr = rest.leading_exponents();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      if (lr[i] < lq[i]) return std::nullopt;
      shift[i] = lr[i] - lq[i];
    }
    MultiPoly t = MultiPoly::monomial(shift, rest.leading_coefficient() / cq);
    quotient += t;
    rest -= t * q;
  }
  return quotient;
}

namespace {

// Coefficients of p viewed as a polynomial in `var`; entry k multiplies var^k.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var) {
  std::vector<MultiPoly> out(p.degree_in(var) + 1, MultiPoly(p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[var] = 0;
    out[e[var]] += MultiPoly::monomial(f, c);
  }
  return out;
}

MultiPoly gcd_of_monomial(const MultiPoly& mono, const MultiPoly& other) {
  Exponents low = mono.leading_exponents();
  for (const auto& [e, c] : other.terms())
    for (std::size_t i = 0; i < low.size(); ++i) low[i] = std::min(low[i], e[i]);
  return MultiPoly::monomial(low, 1);
}

std::optional<std::size_t> main_variable(const MultiPoly& p, const MultiPoly& q) {
  for (std::size_t i = p.nvars(); i-- > 0;)
    if (p.degree_in(i) > 0 || q.degree_in(i) > 0) return i;
  return std::nullopt;
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  MultiPoly g(p.nvars());
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd_poly(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly primitive_in(const MultiPoly& p, std::size_t var) {
  MultiPoly c = content_in(p, var);
  auto q = divide_exact(p, c);
  if (!q) throw std::logic_error("content does not divide polynomial");
  return *q;
}

MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
  unsigned db = b.degree_in(var);
  MultiPoly lb = coefficients_in(b, var)[db];
  while (!a.is_zero() && a.degree_in(var) >= db) {
    unsigned da = a.degree_in(var);
    MultiPoly la = coefficients_in(a, var)[da];
    Exponents shift(a.nvars(), 0);
    shift[var] = da - db;
    a = lb * a - la * MultiPoly::monomial(shift, 1) * b;
  }
  return a;
}

}  // namespace

MultiPoly gcd_poly(const MultiPoly& p, const MultiPoly& q) {
  require_same_ring(p, q);
  if (p.is_zero()) return q.primitive_part();
  if (q.is_zero()) return p.primitive_part();
  if (p.is_constant() || q.is_constant()) return MultiPoly::constant(p.nvars(), 1);
  if (p.is_monomial()) return gcd_of_monomial(p, q);
  if (q.is_monomial()) return gcd_of_monomial(q, p);

  std::size_t var = *main_variable(p, q);
  MultiPoly cont = gcd_poly(content_in(p, var), content_in(q, var));

  MultiPoly a = primitive_in(p, var);
  MultiPoly b = primitive_in(q, var);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (!b.is_zero()) {
    MultiPoly r = pseudo_remainder(a, b, var);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_in(r, var);
  }
  return (cont * primitive_in(a, var)).primitive_part();
}

}  // namespace dratio
