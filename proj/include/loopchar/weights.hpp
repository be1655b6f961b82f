#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

namespace loopchar {

/// An integral weight of affine sl2, written l0*Lambda0 + a1*alpha1 + d*delta.
///
/// Both simple reflections preserve this lattice, so every weight the library
/// touches (roots, extremal weights w(k Lambda0), the sums f(w)) has exact
/// integer coordinates. The ordering is lexicographic on (l0, d, a1), which is
/// also the order used for serialization.
struct Weight {
  std::int64_t l0 = 0;
  std::int64_t a1 = 0;
  std::int64_t d = 0;

  constexpr Weight() = default;
  constexpr Weight(std::int64_t l0_, std::int64_t a1_, std::int64_t d_)
      : l0(l0_), a1(a1_), d(d_) {}

  friend constexpr bool operator==(const Weight&, const Weight&) = default;
  friend constexpr std::strong_ordering operator<=>(const Weight& x, const Weight& y) {
    if (auto c = x.l0 <=> y.l0; c != 0) return c;
    if (auto c = x.d <=> y.d; c != 0) return c;
    return x.a1 <=> y.a1;
  }

  constexpr Weight operator-() const { return {-l0, -a1, -d}; }
  constexpr Weight& operator+=(const Weight& o) {
    l0 += o.l0;
    a1 += o.a1;
    d += o.d;
    return *this;
  }
  constexpr Weight& operator-=(const Weight& o) { return *this += -o; }
  friend constexpr Weight operator+(Weight x, const Weight& y) { return x += y; }
  friend constexpr Weight operator-(Weight x, const Weight& y) { return x -= y; }
  friend constexpr Weight operator*(std::int64_t c, const Weight& x) {
    return {c * x.l0, c * x.a1, c * x.d};
  }

  constexpr bool is_zero() const { return l0 == 0 && a1 == 0 && d == 0; }
};

inline constexpr Weight kLambda0{1, 0, 0};
inline constexpr Weight kAlpha1{0, 1, 0};
inline constexpr Weight kAlpha0{0, -1, 1};  // delta - alpha1
inline constexpr Weight kDelta{0, 0, 1};

/// Throws std::invalid_argument unless i is 0 or 1.
void check_simple_index(int i);

/// alpha_0 or alpha_1.
Weight simple_root(int i);

/// The Cartan pairing <mu, alpha_i^vee>.
std::int64_t pairing(const Weight& mu, int i);

/// s_i(mu) = mu - <mu, alpha_i^vee> alpha_i.
Weight reflect(int i, const Weight& mu);

bool is_positive_root(const Weight& mu, bool real_only = false);
bool is_root(const Weight& mu, bool real_only = false);

/// Positive roots (real and imaginary) with delta-coordinate <= dmax, sorted
/// by (d, a1). There are 1 + 3*dmax of them.
std::vector<Weight> positive_roots_up_to(std::int64_t dmax);

/// Index of a positive root in the infinite (d, a1)-sorted list that
/// positive_roots_up_to truncates. Throws if mu is not a positive root.
std::size_t positive_root_index(const Weight& mu);

std::ostream& operator<<(std::ostream& os, const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(w.l0);
    h = h * 1000003u ^ std::hash<std::int64_t>{}(w.a1);
    h = h * 1000003u ^ std::hash<std::int64_t>{}(w.d);
    return h;
  }
};

}  // namespace loopchar
