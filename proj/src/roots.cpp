#include "dratio/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace dratio {

std::vector<Integer> positive_divisors(const Integer& n) {
  Integer m = abs(n);
  if (m == 0) throw std::domain_error("divisors of zero");
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer p = 2; p * p <= m; ++p) {
    unsigned k = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++k;
    }
    if (k) factors.emplace_back(p, k);
  }
  if (m > 1) factors.emplace_back(m, 1);
  std::vector<Integer> divs{1};
  for (const auto& [p, k] : factors) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned i = 1; i <= k; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

namespace {

// Candidate rational roots p/q of an integer polynomial with constant term c0
// and leading coefficient cn (both nonzero).
std::vector<Rational> candidates(const Integer& c0, const Integer& cn) {
  std::vector<Rational> out;
  for (const auto& p : positive_divisors(c0))
    for (const auto& q : positive_divisors(cn)) {
      out.push_back(make_rational(p, q));
      out.push_back(make_rational(-p, q));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

BinaryFactorization rational_roots_binary_form(const MultiPoly& form) {
  if (form.nvars() != 2) throw std::invalid_argument("binary form must have two variables");
  if (form.is_zero() || !form.is_homogeneous()) throw std::invalid_argument("binary form must be nonzero and homogeneous");

  BinaryFactorization out;
  MultiPoly g = form.primitive_part();

  // Roots at [1:0] (Y | g) and [0:1] (X | g).
  for (std::size_t var : {std::size_t{1}, std::size_t{0}}) {
    unsigned low = ~0u;
    for (const auto& [e, c] : g.terms()) low = std::min(low, e[var]);
    if (low > 0) {
      Exponents e(2, 0);
      e[var] = low;
      g = *divide_exact(g, MultiPoly::monomial(e, 1));
      std::vector<Integer> pt = var == 1 ? std::vector<Integer>{1, 0} : std::vector<Integer>{0, 1};
      out.roots.push_back({ProjPoint::from_integers(pt), low});
    }
  }

  if (!g.is_constant()) {
    unsigned n = static_cast<unsigned>(g.total_degree());
    Integer c0 = g.coefficient({0, n}).get_num();  // Y^n
    Integer cn = g.coefficient({n, 0}).get_num();  // X^n
    for (const auto& t : candidates(c0, cn)) {
      // root [p : q] of g(X, Y) <=> g(p, q) = 0; linear factor q*X - p*Y
      Integer p = t.get_num(), q = t.get_den();
      MultiPoly lin = MultiPoly::monomial({1, 0}, Rational(q)) - MultiPoly::monomial({0, 1}, Rational(p));
      unsigned mult = 0;
      while (!g.is_constant()) {
        auto quo = divide_exact(g, lin);
        if (!quo) break;
        g = *quo;
        ++mult;
      }
      if (mult) out.roots.push_back({ProjPoint::from_integers({p, q}), mult});
      if (g.is_constant()) break;
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const BinaryRoot& a, const BinaryRoot& b) { return a.point < b.point; });
  out.remainder = g.primitive_part();
  return out;
}

std::vector<Rational> rational_roots_univariate(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) throw std::invalid_argument("every value is a root of the zero polynomial");
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw std::invalid_argument("polynomial is not univariate in the given variable");

  std::vector<Rational> roots;
  MultiPoly g = p.primitive_part();
  unsigned low = ~0u;
  for (const auto& [e, c] : g.terms()) low = std::min(low, e[var]);
  if (low > 0) {
    roots.emplace_back(0);
    Exponents e(g.nvars(), 0);
    e[var] = low;
    g = *divide_exact(g, MultiPoly::monomial(e, 1));
  }
  if (!g.is_constant()) {
    Integer c0 = g.constant_term().get_num();
    Integer cn = g.leading_coefficient().get_num();
    std::vector<Rational> pt(g.nvars(), Rational(0));
    for (const auto& t : candidates(c0, cn)) {
      pt[var] = t;
      if (g.evaluate(std::span<const Rational>(pt)) == 0) roots.push_back(t);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace dratio
