#include "loopchar/demazure.hpp"

#include <map>
#include <mutex>

#include "loopchar/localization.hpp"
#include "loopchar/partitions.hpp"

namespace loopchar {

LaurentPoly demazure_op(int i, const LaurentPoly& p) {
  const Weight a = simple_root(i);
  std::vector<LaurentPoly::Term> out;
  for (const auto& t : p.terms()) {
    const std::int64_t n = pairing(t.w, i);
    if (n >= 0) {
      for (std::int64_t j = 0; j <= n; ++j) out.push_back({t.w - j * a, t.c});
    } else {
      for (std::int64_t j = 1; j <= -n - 1; ++j) out.push_back({t.w + j * a, -t.c});
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

FactoredRational demazure_op(int i, const FactoredRational& f) {
  const Weight a = simple_root(i);
  const FactoredRational diff = f - LaurentPoly::monomial(-a) * reflect(i, f);
  return (FactoredRational::inverse_one_minus(-a) * diff).reduced();
}

LaurentPoly depth_slice(const LaurentPoly& ch, std::int64_t depth) {
  return ch.filtered([depth](const Weight& mu) { return -mu.d <= depth; });
}

LaurentPoly CharacterTable::depth_slice(std::int64_t depth) const {
  return loopchar::depth_slice(character, depth);
}

CharacterTable demazure_character(const Word& w, int level) {
  if (level <= 0) throw std::invalid_argument("demazure_character: level must be positive");
  if (!w.is_reduced()) throw std::invalid_argument("word " + w.str() + " is not reduced");
  LaurentPoly ch = LaurentPoly::monomial(static_cast<std::int64_t>(level) * kLambda0);
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) ch = demazure_op(*it, ch);
  return {w, level, std::move(ch)};
}

// ---------------------------------------------------------------- Kostant sum

std::vector<KostantTerm> kostant_terms(const Weight& alpha, int level, MultPolicy policy) {
  if (level <= 0) throw std::invalid_argument("kostant_mult: level must be positive");
  std::vector<KostantTerm> terms;
  if (alpha.l0 != level) return terms;
  const Weight lambda = static_cast<std::int64_t>(level) * kLambda0;
  int negative_run = 0;
  for (std::int64_t m = 0;; ++m) {
    if (policy.mmax && m > *policy.mmax) break;
    const Word wm = chain_word(static_cast<std::size_t>(m));
    const Weight arg = act(wm, lambda) - f_sum(wm) - alpha;
    Weight beta = act(wm, kAlpha1);
    if (!is_positive_root(beta)) beta = -beta;
    terms.push_back({m, arg, beta, vector_partition(arg, beta)});
    if (!policy.mmax) {
      negative_run = arg.d < 0 ? negative_run + 1 : 0;
      if (negative_run == 2) break;
    }
  }
  return terms;
}

Integer kostant_mult(const Weight& alpha, int level, MultPolicy policy) {
  Integer total = 0;
  for (const auto& t : kostant_terms(alpha, level, policy)) {
    if (t.m % 2 == 0) total += t.count;
    else total -= t.count;
  }
  return total;
}

bool partition_difference_identity(const Weight& mu, const Weight& beta) {
  return vector_partition(mu) - vector_partition(mu - beta) == vector_partition(mu, beta);
}

// ---------------------------------------------------------------- stabilization oracle

LaurentPoly stable_slice(int level, std::int64_t depth, std::int64_t nmax) {
  if (level <= 0) throw std::invalid_argument("level must be positive");
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (nmax <= 0) nmax = 4 * depth + 16;

  static std::mutex mu;
  static std::map<std::pair<int, std::int64_t>, LaurentPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({level, depth}); it != cache.end()) return it->second;
  }

  // ch(w_{n+1}) = D_i ch(w_n) with w_{n+1} = s_i w_n.
  LaurentPoly ch = LaurentPoly::monomial(static_cast<std::int64_t>(level) * kLambda0);
  LaurentPoly last = depth_slice(ch, depth);
  int unchanged = 1;
  for (std::int64_t n = 0; n < nmax; ++n) {
    ch = demazure_op((n + 1) % 2 == 1 ? 0 : 1, ch);
    LaurentPoly slice = depth_slice(ch, depth);
    unchanged = slice == last ? unchanged + 1 : 1;
    last = std::move(slice);
    if (unchanged == 3) {
      std::lock_guard lock(mu);
      cache.emplace(std::make_pair(level, depth), last);
      return last;
    }
  }
  throw NotStabilized("depth slice did not stabilize by n = " + std::to_string(nmax));
}

Integer weight_multiplicity_oracle(const Weight& alpha, int level, std::int64_t depth) {
  if (-alpha.d > depth) throw std::invalid_argument("weight lies outside the requested depth");
  return stable_slice(level, depth).coefficient(alpha);
}

}  // namespace loopchar
