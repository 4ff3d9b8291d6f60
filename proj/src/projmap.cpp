#include "dratio/projmap.hpp"

#include <algorithm>

#include "dratio/roots.hpp"

namespace dratio {

namespace {

// Horner-free integer evaluation with a shared power table: powers[i][k] = x_i^k.
Integer eval_with_powers(const MultiPoly& p, const std::vector<std::vector<Integer>>& powers) {
  Integer sum = 0, t;
  for (const auto& [e, c] : p.terms()) {
    t = c.get_num();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= powers[i][e[i]];
    sum += t;
  }
  return sum;
}

}  // namespace

ProjMap ProjMap::from_forms(std::vector<MultiPoly> forms) {
  if (forms.size() < 2) throw std::invalid_argument("a self-map of P^n needs at least two forms");
  const std::size_t nv = forms.size();
  long degree = -1;
  for (const auto& f : forms) {
    if (f.nvars() != nv) throw std::invalid_argument("each form must use n+1 variables");
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw std::invalid_argument("forms must be homogeneous");
    if (degree >= 0 && f.total_degree() != degree) throw std::invalid_argument("forms must share one degree");
    degree = f.total_degree();
  }
  if (degree < 0) throw std::invalid_argument("all forms vanish identically");

  MultiPoly g(nv);
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    g = gcd_poly(g, f);
    if (g.is_constant()) break;
  }
  if (!g.is_constant())
    for (auto& f : forms)
      if (!f.is_zero()) f = *divide_exact(f, g);

  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& f : forms)
    for (const auto& [e, c] : f.terms()) {
      num_gcd = gcd(num_gcd, Integer(c.get_num()));
      den_lcm = lcm(den_lcm, Integer(c.get_den()));
    }
  Rational scale = make_rational(den_lcm, num_gcd);
  auto last = std::find_if(forms.rbegin(), forms.rend(), [](const MultiPoly& f) { return !f.is_zero(); });
  if (last->leading_coefficient() < 0) scale = -scale;
  for (auto& f : forms) f *= scale;

  ProjMap m;
  m.forms_ = std::move(forms);
  for (const auto& f : m.forms_)
    if (!f.is_zero()) m.degree_ = static_cast<unsigned>(f.total_degree());
  if (m.degree_ == 0) throw std::invalid_argument("normalized map is constant");
  return m;
}

ProjMap ProjMap::identity(std::size_t n) {
  std::vector<MultiPoly> forms;
  for (std::size_t i = 0; i <= n; ++i) forms.push_back(MultiPoly::variable(n + 1, i));
  return from_forms(std::move(forms));
}

ProjPoint ProjMap::apply(const ProjPoint& p) const {
  if (p.size() != forms_.size()) throw std::invalid_argument("point has wrong dimension");
  std::vector<std::vector<Integer>> powers(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    powers[i].resize(degree_ + 1);
    powers[i][0] = 1;
    for (unsigned k = 1; k <= degree_; ++k) powers[i][k] = powers[i][k - 1] * p[i];
  }
  std::vector<Integer> image;
  image.reserve(forms_.size());
  bool all_zero = true;
  for (const auto& f : forms_) {
    image.push_back(eval_with_powers(f, powers));
    if (image.back() != 0) all_zero = false;
  }
  if (all_zero) throw std::domain_error("map is undefined at " + p.str());
  return ProjPoint::from_integers(std::move(image));
}

AffinePoint ProjMap::apply_affine(std::span<const Rational> p) const {
  return apply(ProjPoint::from_affine(p)).affine();
}

bool ProjMap::is_affine_polynomial() const {
  const MultiPoly& last = forms_.back();
  if (!last.is_monomial()) return false;
  Exponents zd(forms_.size(), 0);
  zd.back() = degree_;
  return last.leading_exponents() == zd;
}

std::vector<MultiPoly> ProjMap::affine_components() const {
  if (!is_affine_polynomial()) throw std::domain_error("map does not restrict to a polynomial map of A^n");
  const std::size_t n = dim();
  Rational lc = forms_.back().leading_coefficient();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(MultiPoly::variable(n, i));
  images.push_back(MultiPoly::constant(n, 1));
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(forms_[i].substitute(images) * (1 / lc));
  return out;
}

std::string ProjMap::str() const {
  auto names = projective_names(dim());
  std::string s = "[";
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (i) s += ", ";
    s += forms_[i].to_string(names);
  }
  return s + "]";
}

std::string ProjMap::affine_str(std::span<const std::string> names) const {
  auto comps = affine_components();
  std::string s = "(";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) s += ", ";
    s += comps[i].to_string(names);
  }
  return s + ")";
}

std::vector<std::string> projective_names(std::size_t n) {
  if (n == 2) return {"X", "Y", "Z"};
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("X" + std::to_string(i));
  out.emplace_back("Z");
  return out;
}

std::vector<std::string> affine_names(std::size_t n) {
  if (n == 2) return {"x", "y"};
  if (n == 3) return {"x", "y", "z"};
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

ProjMap homogenize_affine(std::span<const MultiPoly> components) {
  if (components.empty()) throw std::invalid_argument("no components");
  const std::size_t n = components.size();
  long d = 0;
  for (const auto& f : components) {
    if (f.nvars() != n) throw std::invalid_argument("an affine map of A^n needs n components in n variables");
    d = std::max(d, f.total_degree());
  }
  if (d <= 0) throw std::invalid_argument("all components are constant");
  std::vector<MultiPoly> forms;
  for (const auto& f : components) {
    MultiPoly F(n + 1);
    for (const auto& [e, c] : f.terms()) {
      Exponents h(e);
      unsigned deg = 0;
      for (unsigned k : e) deg += k;
      h.push_back(static_cast<unsigned>(d) - deg);
      F += MultiPoly::monomial(h, c);
    }
    forms.push_back(std::move(F));
  }
  Exponents zd(n + 1, 0);
  zd.back() = static_cast<unsigned>(d);
  forms.push_back(MultiPoly::monomial(zd, 1));
  return ProjMap::from_forms(std::move(forms));
}

ProjMap compose(const ProjMap& f, const ProjMap& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("cannot compose maps of different dimension");
  std::vector<MultiPoly> forms;
  bool all_zero = true;
  for (const auto& F : f.forms()) {
    forms.push_back(F.substitute(g.forms()));
    if (!forms.back().is_zero()) all_zero = false;
  }
  if (all_zero) throw std::domain_error("composition vanishes identically");
  return ProjMap::from_forms(std::move(forms));
}

std::vector<MultiPoly> local_forms_at(const ProjMap& f, const ProjPoint& point) {
  if (f.dim() != 2) throw DimensionUnsupported("local charts are implemented for plane maps only");
  if (point.size() != 3 || point[2] != 0) throw std::invalid_argument("point must lie on Z = 0");
  std::vector<MultiPoly> images;
  Rational shift;
  if (point[0] != 0) {
    // X = 1; local (y, z), point at y = b/a
    shift = make_rational(point[1], point[0]);
    images = {MultiPoly::constant(2, 1), MultiPoly::variable(2, 0) + MultiPoly::constant(2, shift),
              MultiPoly::variable(2, 1)};
  } else {
    // Y = 1; local (x, z), point at x = 0
    images = {MultiPoly::variable(2, 0), MultiPoly::constant(2, 1), MultiPoly::variable(2, 1)};
  }
  std::vector<MultiPoly> out;
  for (const auto& F : f.forms()) out.push_back(F.substitute(images));
  return out;
}

BasePointReport base_points_p2(const ProjMap& f) {
  if (f.dim() != 2) throw DimensionUnsupported("base-locus computation is implemented for plane maps only");
  const std::size_t map_z[] = {0, 1, 0};  // (X, Y, Z) -> (X, Y); Z is set to 0 first
  MultiPoly g(2);
  for (const auto& F : f.forms()) {
    MultiPoly restricted = F.set_variable(2, 0).remap(2, map_z);
    if (restricted.is_zero()) continue;
    g = gcd_poly(g, restricted);
  }
  BasePointReport report;
  if (g.is_zero() || g.is_constant()) return report;
  auto fact = rational_roots_binary_form(g);
  for (const auto& root : fact.roots) {
    ProjPoint p = ProjPoint::from_integers({root.point[0], root.point[1], 0});
    unsigned mult = ~0u;
    for (const auto& local : local_forms_at(f, p)) {
      auto ord = local.order_at_origin();
      if (ord) mult = std::min(mult, *ord);
    }
    report.rational_points.push_back({p, mult});
  }
  if (!fact.remainder.is_constant()) report.irrational_factor = fact.remainder;
  return report;
}

bool is_jointly_regular(const ProjMap& f1, const ProjMap& f2) {
  auto b1 = base_points_p2(f1);
  auto b2 = base_points_p2(f2);
  for (const auto& p : b1.rational_points)
    for (const auto& q : b2.rational_points)
      if (p.point == q.point) return false;
  if (b1.irrational_factor && b2.irrational_factor)
    return gcd_poly(*b1.irrational_factor, *b2.irrational_factor).is_constant();
  return true;
}

}  // namespace dratio
