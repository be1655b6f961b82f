#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "loopchar/charalg.hpp"
#include "loopchar/weyl.hpp"

namespace loopchar {

/// D_i(e^mu) = (e^mu - e^{s_i mu - alpha_i}) / (1 - e^{-alpha_i}), evaluated as
/// the finite alpha_i-string it equals, extended linearly.
LaurentPoly demazure_op(int i, const LaurentPoly& p);

/// The same operator on rational functions, (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}).
FactoredRational demazure_op(int i, const FactoredRational& f);

/// Character of the Demazure module E_w(level * Lambda0).
struct CharacterTable {
  Word word;
  int level = 0;
  LaurentPoly character;

  Integer multiplicity(const Weight& mu) const { return character.coefficient(mu); }
  Integer dimension() const { return character.coefficient_sum(); }
  /// Terms at most `depth` delta-steps below the top weight.
  LaurentPoly depth_slice(std::int64_t depth) const;
};

/// D_{i1} ... D_{in} e^{level Lambda0} for w = s_{i1} ... s_{in}, the rightmost
/// operator acting first. Throws for level <= 0 or a non-reduced word.
CharacterTable demazure_character(const Word& w, int level);

/// Terms of a character within `depth` delta-steps of level * Lambda0.
LaurentPoly depth_slice(const LaurentPoly& ch, std::int64_t depth);

/// One term of the alternating multiplicity sum.
struct KostantTerm {
  std::int64_t m;
  Weight argument;  // w_m(lambda) - f(w_m) - alpha
  Weight excluded;  // positive representative of w_m(alpha1)
  Integer count;    // N_excluded(argument)
};

struct MultPolicy {
  /// Evaluate exactly m = 0..mmax instead of the automatic stopping rule
  /// (stop after two consecutive negative delta-coordinates).
  std::optional<std::int64_t> mmax;
};

std::vector<KostantTerm> kostant_terms(const Weight& alpha, int level, MultPolicy policy = {});

/// Multiplicity of alpha in the irreducible module of highest weight
/// level * Lambda0, as an alternating sum of restricted vector partition
/// counts. Zero when alpha has a different level.
Integer kostant_mult(const Weight& alpha, int level, MultPolicy policy = {});

/// N(mu) - N(mu - beta) = N_beta(mu) for a positive root beta.
bool partition_difference_identity(const Weight& mu, const Weight& beta);

class NotStabilized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Depth slice of the limit of demazure_character(w_n, level): the first
/// slice that stays unchanged for three consecutive n. Cached per
/// (level, depth). Throws NotStabilized if n reaches nmax first.
LaurentPoly stable_slice(int level, std::int64_t depth, std::int64_t nmax = 0);

/// Coefficient of alpha in stable_slice(level, depth). alpha must lie within
/// the slice.
Integer weight_multiplicity_oracle(const Weight& alpha, int level, std::int64_t depth);

}  // namespace loopchar
