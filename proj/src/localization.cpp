#include "loopchar/localization.hpp"

#include <stdexcept>

namespace loopchar {

std::vector<Weight> isotropy_weights(const Word& w, const Gallery& g) {
  if (w.size() != g.size()) throw std::invalid_argument("gallery length does not match word");
  std::vector<Weight> weights;
  weights.reserve(w.size());
  std::vector<std::uint8_t> selected;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (g[j]) selected.push_back(static_cast<std::uint8_t>(w[j]));
    weights.push_back(act(Word(selected), -simple_root(w[j])));
  }
  return weights;
}

FactoredRational gallery_summand(const Word& w, const Gallery& g) {
  return FactoredRational(LaurentPoly(1), isotropy_weights(w, g));
}

namespace {

void require_reduced(const Word& w) {
  if (!w.is_reduced()) throw std::invalid_argument("word " + w.str() + " is not reduced");
}

}  // namespace

NilHeckeCoeffs b_coeffs(const Word& w) {
  require_reduced(w);
  const GalleryRange range = galleries(w);
  const auto count = static_cast<std::int64_t>(range.count());

  std::vector<WeylElement> where(static_cast<std::size_t>(count));
  std::vector<FactoredRational> summands(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    const Gallery g = range[static_cast<std::uint64_t>(idx)];
    where[idx] = realization(w, g);
    summands[idx] = gallery_summand(w, g);
  }

  // Groups by realization are independent; each is folded in gallery order,
  // exactly as the serial reference does, so the results coincide.
  std::map<WeylElement, std::vector<std::size_t>> groups;
  for (std::size_t idx = 0; idx < where.size(); ++idx) groups[where[idx]].push_back(idx);

  std::vector<std::pair<WeylElement, std::vector<std::size_t>>> work(groups.begin(), groups.end());
  std::vector<FactoredRational> totals(work.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(work.size()); ++k) {
    FactoredRational sum;
    for (auto idx : work[k].second) sum += summands[idx];
    totals[k] = sum.reduced();
  }

  NilHeckeCoeffs out;
  for (std::size_t k = 0; k < work.size(); ++k)
    if (!totals[k].is_zero()) out.emplace(work[k].first, std::move(totals[k]));
  return out;
}

namespace serial {

NilHeckeCoeffs b_coeffs(const Word& w) {
  require_reduced(w);
  NilHeckeCoeffs out;
  for (const Gallery& g : galleries(w)) out[realization(w, g)] += gallery_summand(w, g);
  NilHeckeCoeffs reduced;
  for (auto& [v, r] : out) {
    auto red = r.reduced();
    if (!red.is_zero()) reduced.emplace(v, std::move(red));
  }
  return reduced;
}

}  // namespace serial

FactoredRational b_coeff(const Word& w, const WeylElement& v) {
  require_reduced(w);
  FactoredRational sum;
  for (const Gallery& g : galleries(w))
    if (realization(w, g) == v) sum += gallery_summand(w, g);
  return sum.reduced();
}

LaurentPoly bar(const LaurentPoly& p) {
  return p.map_exponents([](const Weight& mu) { return -mu; });
}

FactoredRational bar(const FactoredRational& r) {
  return r.map_exponents([](const Weight& mu) { return -mu; });
}

LaurentPoly act(const WeylElement& v, const LaurentPoly& p) {
  const Word word = v.reduced_word();
  return p.map_exponents([&](const Weight& mu) { return act(word, mu); });
}

FactoredRational act(const WeylElement& v, const FactoredRational& r) {
  const Word word = v.reduced_word();
  return r.map_exponents([&](const Weight& mu) { return act(word, mu); });
}

FactoredRational reflect(int i, const FactoredRational& r) {
  check_simple_index(i);
  return r.map_exponents([i](const Weight& mu) { return reflect(i, mu); });
}

std::vector<FactoredRational> coset_sums(const Word& w) {
  const auto b = b_coeffs(w);
  std::vector<FactoredRational> sums(w.size() + 1);
  for (const auto& [v, coeff] : b) {
    const auto m = coset_index(v);
    if (m >= sums.size()) throw std::logic_error("coset index beyond word length");
    sums[m] += bar(coeff);
  }
  for (auto& s : sums) s = s.reduced();
  return sums;
}

FactoredRational r_coset(const Word& w, std::size_t m) {
  if (m > w.size()) throw std::invalid_argument("r_coset: m exceeds the word length");
  return coset_sums(w)[m];
}

// ---------------------------------------------------------------- nil-Hecke ring

NilHeckeElement::NilHeckeElement(NilHeckeCoeffs coeffs) : coeffs_(std::move(coeffs)) {}

NilHeckeElement NilHeckeElement::identity() {
  return NilHeckeElement({{WeylElement::identity(), FactoredRational::one()}});
}

NilHeckeElement NilHeckeElement::T(int i) {
  const Weight a = simple_root(i);
  return NilHeckeElement({{WeylElement::generator(i), FactoredRational::inverse_one_minus(a)},
                          {WeylElement::identity(), FactoredRational::inverse_one_minus(-a)}});
}

FactoredRational NilHeckeElement::coefficient(const WeylElement& v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? FactoredRational{} : it->second;
}

NilHeckeElement operator*(const NilHeckeElement& x, const NilHeckeElement& y) {
  NilHeckeCoeffs out;
  for (const auto& [v, qv] : x.coeffs_)
    for (const auto& [u, qu] : y.coeffs_) out[v * u] += qv * act(v, qu);
  NilHeckeCoeffs reduced;
  for (auto& [v, q] : out) {
    auto red = q.reduced();
    if (!red.is_zero()) reduced.emplace(v, std::move(red));
  }
  return NilHeckeElement(std::move(reduced));
}

NilHeckeElement nil_hecke_product(const Word& w) {
  require_reduced(w);
  NilHeckeElement acc = NilHeckeElement::identity();
  for (auto l : w.letters()) acc = acc * NilHeckeElement::T(l);
  return acc;
}

FactoredRational b_recursion_rhs(int i, const NilHeckeCoeffs& tail, const WeylElement& v,
                                 RecursionForm form) {
  const Weight a = simple_root(i);
  auto lookup = [&](const WeylElement& u) {
    auto it = tail.find(u);
    return it == tail.end() ? FactoredRational{} : it->second;
  };
  const FactoredRational shifted =
      LaurentPoly::monomial(form.middle_sign * a) *
      reflect(i, lookup(WeylElement::generator(i) * v));
  return (FactoredRational::inverse_one_minus(form.prefactor_sign * a) * (lookup(v) - shifted))
      .reduced();
}

// ---------------------------------------------------------------- characters

FactoredRational fixed_point_sum(const Word& w, int level, int exponent_sign) {
  if (level < 0) throw std::invalid_argument("level must be nonnegative");
  if (exponent_sign != 1 && exponent_sign != -1) throw std::invalid_argument("sign must be +-1");
  const Weight lambda = static_cast<std::int64_t>(level) * kLambda0;
  const auto sums = coset_sums(w);
  FactoredRational total;
  for (std::size_t m = 0; m < sums.size(); ++m) {
    if (sums[m].is_zero()) continue;
    const Weight top = act(chain_word(m), lambda);
    total += LaurentPoly::monomial(exponent_sign * top) * sums[m];
  }
  return total.reduced();
}

FixedPointConvention calibrated_convention() {
  static const FixedPointConvention chosen = [] {
    // Sections of O(1) on the projective line X_{s0}: weights Lambda0 and
    // Lambda0 - alpha0.
    const FactoredRational expected(LaurentPoly::monomial(kLambda0) +
                                    LaurentPoly::monomial(kLambda0 - kAlpha0));
    const Word line{0};
    std::vector<FixedPointConvention> matches;
    for (int sign : {-1, 1}) {
      const FactoredRational raw = fixed_point_sum(line, 1, sign);
      for (bool use_bar : {false, true}) {
        if (rat_equal(use_bar ? bar(raw) : raw, expected)) matches.push_back({sign, use_bar});
      }
    }
    if (matches.size() != 1)
      throw std::logic_error("fixed-point convention is not uniquely determined");
    return matches.front();
  }();
  return chosen;
}

FactoredRational schubert_character(const Word& w, int level) {
  if (level <= 0) throw std::invalid_argument("schubert_character: level must be positive");
  const auto conv = calibrated_convention();
  FactoredRational raw = fixed_point_sum(w, level, conv.exponent_sign);
  return (conv.apply_bar ? bar(raw) : raw).reduced();
}

LaurentPoly truncated_character(const Word& w, int level, std::int64_t order,
                                std::optional<std::int64_t> a1_cutoff) {
  if (level <= 0) throw std::invalid_argument("truncated_character: level must be positive");
  const auto conv = calibrated_convention();
  const FactoredRational raw = fixed_point_sum(w, level, conv.exponent_sign);
  const LaurentPoly series = expand(raw, order, a1_cutoff);
  return conv.apply_bar ? bar(series) : series;
}

}  // namespace loopchar
