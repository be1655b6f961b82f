#include "loopchar/closedform.hpp"

#include <stdexcept>

#include "loopchar/localization.hpp"
#include "loopchar/partitions.hpp"
#include "loopchar/weyl.hpp"

namespace loopchar {

LaurentPoly limit_numerator(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("coset index must be nonnegative");
  const Word wm = chain_word(static_cast<std::size_t>(m));
  const Weight top = act(wm, kAlpha1);
  return LaurentPoly::monomial(f_sum(wm), m % 2 == 0 ? 1 : -1).times_one_minus(top);
}

FactoredRational r_closed(std::int64_t m, std::int64_t n) {
  if (m < 0 || m > n) throw std::invalid_argument("r_closed requires 0 <= m <= n");
  const std::int64_t a = (n - m) / 2;
  const std::int64_t c = (n - m + 1) / 2;
  const LaurentPoly num = limit_numerator(m) * partition_series(a, n - a);

  std::vector<Weight> den;
  const Weight first = simple_root(static_cast<int>((m + 1) % 2));
  const Weight second = simple_root(static_cast<int>(m % 2));
  for (std::int64_t j = 0; j <= m + a; ++j) den.push_back(first + j * kDelta);
  for (std::int64_t j = 0; j <= c - 1; ++j) den.push_back(second + j * kDelta);
  return FactoredRational(num, den);
}

int recursion_letter(std::int64_t k) { return (k + 1) % 2 == 1 ? 0 : 1; }

std::int64_t recursion_neighbor(std::int64_t m, std::int64_t k) {
  const auto v = WeylElement::generator(recursion_letter(k)) *
                 chain_element(static_cast<std::size_t>(m));
  return static_cast<std::int64_t>(coset_index(v));
}

FactoredRational r_recursion_step(std::int64_t m, std::int64_t k, const FactoredRational& r_m_k,
                                  const FactoredRational& r_neighbor_k, int middle_sign) {
  if (m < 0 || k < 0) throw std::invalid_argument("r_recursion_step: negative index");
  const int i = recursion_letter(k);
  const Weight a = simple_root(i);
  const FactoredRational middle = LaurentPoly::monomial(middle_sign * a) * reflect(i, r_neighbor_k);
  return (FactoredRational::inverse_one_minus(a) * (r_m_k - middle)).reduced();
}

LaurentPoly r_limit(std::int64_t m, std::int64_t order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  return expand(FactoredRational(limit_numerator(m), positive_roots_up_to(order)), order);
}

LaurentPoly r_limit_v1(std::int64_t m, std::int64_t order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  std::vector<LaurentPoly::Term> series;
  for (std::int64_t j = 0; j <= order; ++j) series.push_back({j * kDelta, p_all(j)});
  std::vector<Weight> real;
  for (const auto& r : positive_roots_up_to(order))
    if (r.a1 != 0) real.push_back(r);
  const LaurentPoly num = limit_numerator(m) * LaurentPoly::from_terms(std::move(series));
  return expand(FactoredRational(num, real), order);
}

std::int64_t stabilization_start(std::int64_t order, std::int64_t m) { return 2 * order + m + 2; }

}  // namespace loopchar
