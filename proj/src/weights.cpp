#include "loopchar/weights.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace loopchar {

void check_simple_index(int i) {
  if (i != 0 && i != 1)
    throw std::invalid_argument("simple index must be 0 or 1, got " + std::to_string(i));
}

Weight simple_root(int i) {
  check_simple_index(i);
  return i == 0 ? kAlpha0 : kAlpha1;
}

// <Lambda0, a0^v> = 1, <alpha1, a1^v> = 2, <alpha1, a0^v> = -2, delta pairs to 0.
std::int64_t pairing(const Weight& mu, int i) {
  check_simple_index(i);
  return i == 1 ? 2 * mu.a1 : mu.l0 - 2 * mu.a1;
}

Weight reflect(int i, const Weight& mu) {
  check_simple_index(i);
  if (i == 1) return {mu.l0, -mu.a1, mu.d};
  return {mu.l0, mu.l0 - mu.a1, mu.d + 2 * mu.a1 - mu.l0};
}

bool is_root(const Weight& mu, bool real_only) {
  if (mu.l0 != 0) return false;
  if (mu.a1 == 1 || mu.a1 == -1) return true;
  return !real_only && mu.a1 == 0 && mu.d != 0;
}

bool is_positive_root(const Weight& mu, bool real_only) {
  if (!is_root(mu, real_only)) return false;
  if (mu.d > 0) return true;
  return mu.d == 0 && mu.a1 == 1;
}

std::vector<Weight> positive_roots_up_to(std::int64_t dmax) {
  std::vector<Weight> roots;
  if (dmax < 0) return roots;
  roots.reserve(static_cast<std::size_t>(1 + 3 * dmax));
  roots.push_back(kAlpha1);
  for (std::int64_t d = 1; d <= dmax; ++d)
    for (std::int64_t a = -1; a <= 1; ++a) roots.push_back({0, a, d});
  return roots;
}

std::size_t positive_root_index(const Weight& mu) {
  if (!is_positive_root(mu)) throw std::invalid_argument("not a positive root");
  if (mu.d == 0) return 0;
  return static_cast<std::size_t>(1 + 3 * (mu.d - 1) + (mu.a1 + 1));
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << '(' << w.l0 << ',' << w.a1 << ',' << w.d << ')';
}

}  // namespace loopchar
