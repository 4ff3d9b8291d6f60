#include "dratio/monoid.hpp"

#include <algorithm>
#include <set>

#include "dratio/resolution.hpp"

namespace dratio {

Rational mu_weight(const WordIndex& word, unsigned d1, unsigned d2) {
  Rational mu = 1;
  for (unsigned letter : word) {
    if (letter == 1)
      mu /= d1;
    else if (letter == 2)
      mu /= d2;
    else
      throw std::invalid_argument("word letters must be 1 or 2");
  }
  return mu;
}

Rational delta_s(unsigned d1, unsigned d2, const ExtRational& r) {
  if (d1 == 0 || d2 == 0) throw std::invalid_argument("degrees must be positive");
  Rational sum = Rational(1, d1) + Rational(1, d2);
  if (r.is_infinite()) return sum;
  const Rational& v = r.value();
  return v / (v + 1) * sum;
}

std::vector<WordIndex> words_of_length(unsigned m) {
  std::vector<WordIndex> out{{}};
  for (unsigned k = 0; k < m; ++k) {
    std::vector<WordIndex> next;
    next.reserve(out.size() * 2);
    for (const auto& w : out)
      for (unsigned letter : {1u, 2u}) {
        next.push_back(w);
        next.back().push_back(letter);
      }
    out = std::move(next);
  }
  return out;
}

ProjMap compose_word(const ProjMap& f1, const ProjMap& f2, const WordIndex& word) {
  ProjMap out = ProjMap::identity(f1.dim());
  for (unsigned letter : word) {
    if (letter != 1 && letter != 2) throw std::invalid_argument("word letters must be 1 or 2");
    out = compose(out, letter == 1 ? f1 : f2);
  }
  return out;
}

std::vector<WordIdentityRow> word_identity_check(unsigned m, unsigned d1, unsigned d2, const ExtRational& r,
                                                 unsigned cap) {
  if (m > cap) throw std::invalid_argument("word length " + std::to_string(m) + " exceeds cap " + std::to_string(cap));
  const Rational delta = delta_s(d1, d2, r);
  const Rational q = r.is_infinite() ? Rational(1) : Rational(r.value() / (r.value() + 1));
  std::vector<WordIdentityRow> rows;
  for (unsigned k = 0; k <= m; ++k) {
    Rational sum = 0;
    for (const auto& w : words_of_length(k)) sum += mu_weight(w, d1, d2);
    rows.push_back({k, pow(delta, static_cast<long>(k)), pow(q, static_cast<long>(k)) * sum});
  }
  return rows;
}

PairConfig::PairConfig(ProjMap f1, ProjMap f2, std::optional<ExtRational> r1, std::optional<ExtRational> r2)
    : f1_(std::move(f1)), f2_(std::move(f2)) {
  if (f1_.dim() != f2_.dim()) throw std::invalid_argument("pair maps act on different dimensions");
  if (!f1_.is_affine_polynomial() || !f2_.is_affine_polynomial())
    throw std::invalid_argument("pair maps must be affine polynomial maps");
  if (f1_.dim() == 2) {
    if (!is_jointly_regular(f1_, f2_)) throw NotJointlyRegular("pair is not jointly regular");
    verified_ = true;
  }
  auto fill = [](const ProjMap& f, std::optional<ExtRational>& given, ExtRational& out, Source& src) {
    if (given) {
      if (!given->is_infinite() && given->value() < 1) throw std::invalid_argument("a D-ratio is at least 1");
      out = *given;
      src = Source::supplied;
    } else {
      if (f.dim() != 2) throw DimensionUnsupported("D-ratio must be supplied for maps of P^" + std::to_string(f.dim()));
      out = d_ratio(f);
      src = Source::computed;
    }
  };
  fill(f1_, r1, r1_, s1_);
  fill(f2_, r2, r2_, s2_);
}

std::string to_string(PairConfig::Source s) { return s == PairConfig::Source::computed ? "computed" : "supplied"; }

LogSum pair_deficit_at(const PairConfig& pair, const ProjPoint& p) {
  auto inv = [](const ExtRational& r) { return r.is_infinite() ? Rational(0) : Rational(1 / r.value()); };
  Rational coef = 1 + std::min(inv(pair.r1()), inv(pair.r2()));
  LogSum d = Rational(1, pair.d1()) * weil_height(pair.f1().apply(p)).exact();
  d = d + Rational(1, pair.d2()) * weil_height(pair.f2().apply(p)).exact();
  return d - coef * weil_height(p).exact();
}

DeficitStats pair_deficit(const PairConfig& pair, std::vector<Integer> bounds) {
  return deficit_floors(pair.f1().dim(), std::move(bounds),
                        [&](const ProjPoint& p) { return pair_deficit_at(pair, p); });
}

std::string to_string(PhiOrbitStatus s) {
  switch (s) {
    case PhiOrbitStatus::finite:
      return "finite";
    case PhiOrbitStatus::escaped:
      return "escaped";
    case PhiOrbitStatus::undecided:
      return "undecided";
  }
  return "?";
}

PhiOrbit phi_orbit(const PairConfig& pair, const ProjPoint& start, const PhiOrbitOptions& options) {
  const Integer cap = pow(Integer(10), options.escape_digits);
  PhiOrbit out;
  out.start = start;
  std::set<ProjPoint> seen{start};
  std::vector<ProjPoint> level{start};
  while (!level.empty()) {
    if (out.depth == options.max_depth) return out;
    ++out.depth;
    std::vector<ProjPoint> next;
    for (const auto& p : level) {
      for (const ProjMap* f : {&pair.f1(), &pair.f2()}) {
        ProjPoint q = f->apply(p);
        if (!q.is_affine()) throw std::domain_error("image " + q.str() + " of " + p.str() + " lies on H");
        if (q.max_abs() > cap) {
          out.status = PhiOrbitStatus::escaped;
          return out;
        }
        if (seen.insert(q).second) {
          if (seen.size() > options.node_budget) return out;
          next.push_back(std::move(q));
        }
      }
    }
    level = std::move(next);
  }
  out.status = PhiOrbitStatus::finite;
  out.points.assign(seen.begin(), seen.end());
  return out;
}

PrePhiSearch pre_phi_search(const PairConfig& pair, const HeightBound& bound, const PhiOrbitOptions& options) {
  PrePhiSearch out;
  out.certified = pair.delta_s() < 1;
  for_each_affine_point(pair.f1().dim(), bound.max_abs, [&](const ProjPoint& p) {
    ++out.total;
    PhiOrbit o = phi_orbit(pair, p, options);
    switch (o.status) {
      case PhiOrbitStatus::finite:
        out.finite.push_back(std::move(o));
        break;
      case PhiOrbitStatus::escaped:
        ++out.escaped;
        break;
      case PhiOrbitStatus::undecided:
        out.undecided.push_back(p);
        break;
    }
  });
  return out;
}

}  // namespace dratio
