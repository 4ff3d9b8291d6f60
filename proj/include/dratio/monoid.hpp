#pragma once

// Pairs of maps and the monoid they generate under composition.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dratio/heights.hpp"
#include "dratio/projmap.hpp"
#include "dratio/rational.hpp"

namespace dratio {

/// Letters are 1 or 2.
using WordIndex = std::vector<unsigned>;

/// prod_l d_l^(-#{t : i_t = l}); 1 for the empty word.
Rational mu_weight(const WordIndex& word, unsigned d1, unsigned d2);

/// (1/(1+1/r)) (1/d1 + 1/d2), reading 1/(1+1/r) as 1 when r is infinite.
Rational delta_s(unsigned d1, unsigned d2, const ExtRational& r);

/// All 2^m words of length m, in lexicographic order.
std::vector<WordIndex> words_of_length(unsigned m);

/// f_I = f_{i_1} ∘ ... ∘ f_{i_m}; the identity for the empty word.
ProjMap compose_word(const ProjMap& f1, const ProjMap& f2, const WordIndex& word);

struct WordIdentityRow {
  unsigned m = 0;
  Rational lhs;  // delta_S^m
  Rational rhs;  // (r/(r+1))^m * sum over words of length m of mu_I
  bool holds() const { return lhs == rhs; }
};

/// One row per m' = 0..m. Throws std::invalid_argument when m exceeds `cap`.
std::vector<WordIdentityRow> word_identity_check(unsigned m, unsigned d1, unsigned d2, const ExtRational& r,
                                                 unsigned cap = 12);

class NotJointlyRegular : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PairConfig {
 public:
  enum class Source { computed, supplied };

  /// Computes r1, r2 by resolution unless supplied. For plane maps joint
  /// regularity is checked and NotJointlyRegular thrown on failure; in other
  /// dimensions it is recorded as unverified and both ratios must be supplied.
  PairConfig(ProjMap f1, ProjMap f2, std::optional<ExtRational> r1 = std::nullopt,
             std::optional<ExtRational> r2 = std::nullopt);

  const ProjMap& f1() const { return f1_; }
  const ProjMap& f2() const { return f2_; }
  unsigned d1() const { return f1_.degree(); }
  unsigned d2() const { return f2_.degree(); }
  const ExtRational& r1() const { return r1_; }
  const ExtRational& r2() const { return r2_; }
  Source r1_source() const { return s1_; }
  Source r2_source() const { return s2_; }
  bool joint_regularity_verified() const { return verified_; }

  ExtRational r() const { return std::max(r1_, r2_); }
  Rational delta_s() const { return dratio::delta_s(d1(), d2(), r()); }

 private:
  ProjMap f1_, f2_;
  ExtRational r1_, r2_;
  Source s1_ = Source::computed, s2_ = Source::computed;
  bool verified_ = false;
};

std::string to_string(PairConfig::Source s);

/// Delta(P) = (1/d1) h(f1 P) + (1/d2) h(f2 P) - (1 + min(1/r1, 1/r2)) h(P).
LogSum pair_deficit_at(const PairConfig& pair, const ProjPoint& p);
DeficitStats pair_deficit(const PairConfig& pair, std::vector<Integer> bounds);

enum class PhiOrbitStatus { finite, escaped, undecided };
std::string to_string(PhiOrbitStatus s);

struct PhiOrbitOptions {
  std::size_t node_budget = 100000;  // distinct points per orbit
  std::size_t max_depth = 64;        // word length
  unsigned escape_digits = 400;
};

struct PhiOrbit {
  ProjPoint start;
  PhiOrbitStatus status = PhiOrbitStatus::undecided;
  std::vector<ProjPoint> points;  // the whole orbit when finite, sorted
  std::size_t depth = 0;          // levels expanded
};

/// Breadth-first closure of {f_I(P)} as a set of exact points.
PhiOrbit phi_orbit(const PairConfig& pair, const ProjPoint& start, const PhiOrbitOptions& options = {});

struct PrePhiSearch {
  bool certified = false;  // delta_S < 1
  std::vector<PhiOrbit> finite;
  std::vector<ProjPoint> undecided;
  std::size_t escaped = 0;
  std::size_t total = 0;
};

PrePhiSearch pre_phi_search(const PairConfig& pair, const HeightBound& bound, const PhiOrbitOptions& options = {});

}  // namespace dratio
