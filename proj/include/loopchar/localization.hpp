#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "loopchar/charalg.hpp"
#include "loopchar/weyl.hpp"

namespace loopchar {

/// Coefficients b_{w,v} indexed by v.
using NilHeckeCoeffs = std::map<WeylElement, FactoredRational>;

/// Tangent weights of the Bott-Samelson manifold at the fixed point g:
/// the j-th is (s_{i1}^{g1} ... s_{ij}^{gj})(-alpha_{ij}).
std::vector<Weight> isotropy_weights(const Word& w, const Gallery& g);

/// The gallery's term in the subword sum, prod_j 1/(1 - e^{iso_j}).
FactoredRational gallery_summand(const Word& w, const Gallery& g);

/// All nonzero b_{w,v}, from the subword sum over the 2^n galleries. The
/// summands, and then the sums for distinct v, are computed under OpenMP;
/// each sum runs in gallery order, so the result matches serial::b_coeffs
/// term for term whatever the thread count.
NilHeckeCoeffs b_coeffs(const Word& w);

/// Single coefficient; zero when no gallery realizes v.
FactoredRational b_coeff(const Word& w, const WeylElement& v);

namespace serial {
/// Reference implementation: one thread, summands added one at a time in
/// gallery order.
NilHeckeCoeffs b_coeffs(const Word& w);
}  // namespace serial

/// e^mu -> e^{-mu}.
LaurentPoly bar(const LaurentPoly& p);
FactoredRational bar(const FactoredRational& r);

/// Action of the Weyl group on exponents.
LaurentPoly act(const WeylElement& v, const LaurentPoly& p);
FactoredRational act(const WeylElement& v, const FactoredRational& r);
FactoredRational reflect(int i, const FactoredRational& r);

/// R_m(X_w) = sum over v' in w_m W of bar(b_{w,v'}), for m = 0..len(w).
std::vector<FactoredRational> coset_sums(const Word& w);
FactoredRational r_coset(const Word& w, std::size_t m);

/// Element sum_v q_v delta_v of the nil-Hecke ring, multiplied by
/// (q_v delta_v)(q_u delta_u) = q_v v(q_u) delta_{vu}.
class NilHeckeElement {
 public:
  NilHeckeElement() = default;
  explicit NilHeckeElement(NilHeckeCoeffs coeffs);

  static NilHeckeElement identity();
  /// T_{s_i} = 1/(1 - e^{alpha_i}) delta_{s_i} + 1/(1 - e^{-alpha_i}) delta_e.
  static NilHeckeElement T(int i);

  const NilHeckeCoeffs& coeffs() const { return coeffs_; }
  FactoredRational coefficient(const WeylElement& v) const;

  friend NilHeckeElement operator*(const NilHeckeElement& x, const NilHeckeElement& y);

 private:
  NilHeckeCoeffs coeffs_;
};

/// T_w = T_{s_{i1}} ... T_{s_{in}} by repeated multiplication.
NilHeckeElement nil_hecke_product(const Word& w);

/// Shape of the one-letter recursion for w = s_i w':
///   b_{w,v} = (1 - e^{p alpha_i})^{-1} (b_{w',v} - e^{q alpha_i} s_i b_{w',s_i v})
/// with p = prefactor_sign and q = middle_sign.
struct RecursionForm {
  int prefactor_sign;
  int middle_sign;
  friend bool operator==(const RecursionForm&, const RecursionForm&) = default;
};

/// The form that holds for the subword sum.
inline constexpr RecursionForm kBRecursion{-1, -1};

FactoredRational b_recursion_rhs(int i, const NilHeckeCoeffs& tail, const WeylElement& v,
                                 RecursionForm form = kBRecursion);

/// How the fixed-point sum is turned into a character: which sign goes on
/// the exponent w_m(lambda), and whether the bar involution is applied to the
/// total.
struct FixedPointConvention {
  int exponent_sign;
  bool apply_bar;
  friend bool operator==(const FixedPointConvention&, const FixedPointConvention&) = default;
};

/// sum_m e^{sign * w_m(level Lambda0)} R_m(X_w), reduced. Level 0 is allowed.
FactoredRational fixed_point_sum(const Word& w, int level, int exponent_sign);

/// The single convention that turns the fixed-point sum of the projective
/// line (w = s0, level 1) into its section character e^{L0} + e^{L0 - a0}.
/// Determined once, on first use.
FixedPointConvention calibrated_convention();

/// Character of the Schubert variety X_w with lambda = level * Lambda0.
/// Throws for level <= 0.
FactoredRational schubert_character(const Word& w, int level);

/// The same character from a truncated series expansion of the raw
/// fixed-point sum: depth (delta-distance below lambda) <= order and
/// |a1| <= a1_cutoff.
LaurentPoly truncated_character(const Word& w, int level, std::int64_t order,
                                std::optional<std::int64_t> a1_cutoff = std::nullopt);

}  // namespace loopchar
