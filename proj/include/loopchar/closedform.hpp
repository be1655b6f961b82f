#pragma once

#include <cstdint>

#include "loopchar/charalg.hpp"

namespace loopchar {

/// Closed form of R_m(X_n) for the chain w_n. Assembled factor by factor:
///   (-1)^m e^{f(w_m)} (1 - e^{w_m alpha1}) sum_j P_{a,n-a}(j) e^{j delta}
///   / prod_{j=0}^{m+a} (1 - e^{alpha_{(m+1)%2} + j delta})
///   / prod_{j=0}^{ceil((n-m)/2)-1} (1 - e^{alpha_{m%2} + j delta}),
/// with a = floor((n-m)/2). Not reduced. Throws for m > n or m < 0.
FactoredRational r_closed(std::int64_t m, std::int64_t n);

/// The simple index i with w_{k+1} = s_i w_k.
int recursion_letter(std::int64_t k);
/// Coset index of s_i w_m, i = recursion_letter(k).
std::int64_t recursion_neighbor(std::int64_t m, std::int64_t k);

/// Sign q in the middle term of the coset recursion below; the value that
/// agrees with the subword sum.
inline constexpr int kRStepMiddleSign = 1;

/// R_m(X_{k+1}) = (1 - e^{alpha_i})^{-1} (R_m(X_k) - e^{q alpha_i} s_i R_{nbr}(X_k)),
/// with i = recursion_letter(k), nbr = recursion_neighbor(m, k), q = middle_sign.
FactoredRational r_recursion_step(std::int64_t m, std::int64_t k, const FactoredRational& r_m_k,
                                  const FactoredRational& r_neighbor_k,
                                  int middle_sign = kRStepMiddleSign);

/// Numerator (-1)^m e^{f(w_m)} (1 - e^{w_m alpha1}) shared by the limits.
LaurentPoly limit_numerator(std::int64_t m);

/// Limit n -> infinity of R_m(X_n), expanded to delta-degree <= order: the
/// numerator over the product of all positive roots (imaginary ones included).
LaurentPoly r_limit(std::int64_t m, std::int64_t order);

/// Same limit with the imaginary roots written as sum_n P(n) e^{n delta} in
/// the numerator and only real roots in the denominator.
LaurentPoly r_limit_v1(std::int64_t m, std::int64_t order);

/// First n from which expand(r_closed(m, n), order) no longer changes.
std::int64_t stabilization_start(std::int64_t order, std::int64_t m);

}  // namespace loopchar
