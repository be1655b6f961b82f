#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "loopchar/weights.hpp"

namespace loopchar {

using Integer = mpz_class;

/// A finitely supported sum of c * e^w with nonzero integer coefficients.
///
/// Terms are kept in a vector sorted by Weight order, so shifting by a
/// monomial and multiplying by a binomial (1 - e^beta) are linear merges.
class LaurentPoly {
 public:
  struct Term {
    Weight w;
    Integer c;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(long constant);

  static LaurentPoly monomial(const Weight& w, const Integer& c = 1);
  /// Sorts, combines duplicate weights and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  Integer coefficient(const Weight& w) const;
  Integer coefficient_sum() const;

  LaurentPoly shifted(const Weight& mu) const;
  LaurentPoly scaled(const Integer& c) const;
  /// p * (1 - e^beta).
  LaurentPoly times_one_minus(const Weight& beta) const;
  /// q with p = q * (1 - e^beta), if p is divisible; beta must be nonzero
  /// with l0 = 0.
  std::optional<LaurentPoly> divide_one_minus(const Weight& beta) const;

  /// Applies an injective map to every exponent.
  template <class F>
  LaurentPoly map_exponents(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({f(t.w), t.c});
    return from_terms(std::move(out));
  }

  /// Keeps the terms satisfying pred.
  template <class Pred>
  LaurentPoly filtered(Pred&& pred) const {
    LaurentPoly r;
    for (const auto& t : terms_)
      if (pred(t.w)) r.terms_.push_back(t);
    return r;
  }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Result of rewriting a factor (1 - e^beta) in positive-root direction:
/// (1 - e^beta) = prefactor * (1 - e^beta_pos).
struct Polarized {
  Weight beta;
  LaurentPoly prefactor;
};

/// Throws std::domain_error for beta = 0 and std::invalid_argument when
/// neither beta nor -beta is a positive root.
Polarized polarize(const Weight& beta);

/// num / prod_{beta in den} (1 - e^beta), with every beta a positive root.
///
/// Denominators stay factored. Sums use the smallest common multiset of
/// factors; reduced() cancels factors that divide the numerator exactly.
class FactoredRational {
 public:
  FactoredRational() = default;  // zero
  explicit FactoredRational(LaurentPoly num);
  /// Factors in den may point in either direction; negative ones are
  /// polarized into the numerator.
  FactoredRational(LaurentPoly num, const std::vector<Weight>& den);

  static FactoredRational one() { return FactoredRational(LaurentPoly(1)); }
  /// 1 / (1 - e^beta).
  static FactoredRational inverse_one_minus(const Weight& beta);

  const LaurentPoly& num() const { return num_; }
  const std::vector<Weight>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  /// Cancels every denominator factor that divides the numerator. For
  /// denominators made of real roots the result is canonical.
  FactoredRational reduced() const;

  /// Applies a lattice automorphism to all exponents and re-polarizes.
  template <class F>
  FactoredRational map_exponents(F&& f) const {
    std::vector<Weight> den;
    den.reserve(den_.size());
    for (const auto& b : den_) den.push_back(f(b));
    return FactoredRational(num_.map_exponents(f), den);
  }

  FactoredRational operator-() const;
  FactoredRational& operator+=(const FactoredRational& o);
  FactoredRational& operator-=(const FactoredRational& o);
  FactoredRational& operator*=(const FactoredRational& o);
  FactoredRational& operator*=(const LaurentPoly& p);
  friend FactoredRational operator+(FactoredRational a, const FactoredRational& b) {
    return a += b;
  }
  friend FactoredRational operator-(FactoredRational a, const FactoredRational& b) {
    return a -= b;
  }
  friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) {
    return a *= b;
  }
  friend FactoredRational operator*(FactoredRational a, const LaurentPoly& p) { return a *= p; }
  friend FactoredRational operator*(const LaurentPoly& p, FactoredRational a) { return a *= p; }

  /// Same numerator and denominator multiset (not mathematical equality).
  bool identical(const FactoredRational& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  struct Raw {};
  FactoredRational(Raw, LaurentPoly num, std::vector<Weight> den);

  LaurentPoly num_;
  std::vector<Weight> den_;  // sorted
};

std::ostream& operator<<(std::ostream& os, const FactoredRational& r);

/// Mathematical equality, decided by clearing denominators.
bool rat_equal(const FactoredRational& r, const FactoredRational& s);

/// Power-series expansion in the positive-root cone, keeping the terms with
/// delta-coordinate <= order and |a1| <= a1_cutoff. The default cutoff is
/// order + level*order, level being the largest |l0| in the numerator.
/// Retained coefficients are exact.
LaurentPoly expand(const FactoredRational& r, std::int64_t order,
                   std::optional<std::int64_t> a1_cutoff = std::nullopt);

std::int64_t default_a1_cutoff(std::int64_t order, std::int64_t level);

}  // namespace loopchar
