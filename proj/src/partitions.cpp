#include "loopchar/partitions.hpp"

#include <stdexcept>

namespace loopchar {

namespace {

void check_nonneg(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw std::invalid_argument("partition bounds must be nonnegative");
}

}  // namespace

PartitionTable& PartitionTable::shared() {
  static PartitionTable table;
  return table;
}

const std::vector<Integer>& PartitionTable::gaussian_locked(std::int64_t n, std::int64_t k) {
  auto key = std::make_pair(n, k);
  if (auto it = gauss_.find(key); it != gauss_.end()) return it->second;
  std::vector<Integer> g;
  if (n == 0 || k == 0) {
    g = {Integer(1)};
  } else {
    // G_{n,k} = G_{n,k-1} + q^k G_{n-1,k}
    g.assign(static_cast<std::size_t>(n * k + 1), Integer(0));
    const auto& left = gaussian_locked(n, k - 1);
    for (std::size_t j = 0; j < left.size(); ++j) g[j] += left[j];
    const auto& down = gaussian_locked(n - 1, k);
    for (std::size_t j = 0; j < down.size(); ++j) g[j + static_cast<std::size_t>(k)] += down[j];
  }
  return gauss_.emplace(key, std::move(g)).first->second;
}

std::vector<Integer> PartitionTable::gaussian(std::int64_t n, std::int64_t k) {
  check_nonneg(n, k);
  std::lock_guard lock(mu_);
  return gaussian_locked(n, k);
}

Integer PartitionTable::p_restricted(std::int64_t n, std::int64_t k, std::int64_t m) {
  check_nonneg(n, k);
  if (m < 0 || m > n * k) return 0;
  std::lock_guard lock(mu_);
  return gaussian_locked(n, k)[static_cast<std::size_t>(m)];
}

Integer PartitionTable::q_exact(std::int64_t n, std::int64_t k, std::int64_t m) {
  check_nonneg(n, k);
  if (n == 0) return m == 0 ? 1 : 0;
  return p_restricted(n, k, m) - p_restricted(n - 1, k, m);
}

Integer PartitionTable::p_all(std::int64_t m) {
  if (m < 0) return 0;
  // Parts of size <= m, any number of them: the coin-change recurrence.
  std::vector<Integer> p(static_cast<std::size_t>(m + 1), Integer(0));
  p[0] = 1;
  for (std::int64_t part = 1; part <= m; ++part)
    for (std::int64_t s = part; s <= m; ++s) p[s] += p[s - part];
  return p[static_cast<std::size_t>(m)];
}

Integer p_restricted(std::int64_t n, std::int64_t k, std::int64_t m) {
  return PartitionTable::shared().p_restricted(n, k, m);
}

Integer q_exact(std::int64_t n, std::int64_t k, std::int64_t m) {
  return PartitionTable::shared().q_exact(n, k, m);
}

Integer p_all(std::int64_t m) { return PartitionTable::shared().p_all(m); }

bool conjugate_symmetry_check(std::int64_t a, std::int64_t b, std::int64_t j) {
  return p_restricted(a, b, j) == p_restricted(b, a, j);
}

bool identity_part(std::int64_t a, std::int64_t b, std::int64_t j) {
  if (b < 1) throw std::invalid_argument("identity_part needs b >= 1");
  return p_restricted(a, b, j) + p_restricted(a + 1, b - 1, j - a - 1) ==
         p_restricted(a + 1, b, j);
}

bool identity_partcor(std::int64_t a, std::int64_t b, std::int64_t j) {
  if (b < 1) throw std::invalid_argument("identity_partcor needs b >= 1");
  return p_restricted(a + 1, b - 1, j) + p_restricted(a, b, j - b) == p_restricted(a + 1, b, j);
}

namespace {

std::int64_t floor_div2(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
std::int64_t ceil_div2(std::int64_t x) { return -floor_div2(-x); }

}  // namespace

bool identity_elem(std::int64_t k, std::int64_t m) {
  if (k <= m || (k - m) % 2 == 0) return false;
  const std::int64_t f = floor_div2(k - m);
  const std::int64_t f1 = floor_div2(k - (m - 1));
  const std::int64_t c = ceil_div2(k - m);
  const std::int64_t rhs = (k - f) * (f + 1);
  return (k - f) * f + (m + f + 1) == rhs && (k - f1) * f1 + c == rhs && m + f + 1 == k - f;
}

LaurentPoly partition_series(std::int64_t n, std::int64_t k) {
  const auto g = PartitionTable::shared().gaussian(n, k);
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t j = 0; j < g.size(); ++j)
    terms.push_back({static_cast<std::int64_t>(j) * kDelta, g[j]});
  return LaurentPoly::from_terms(std::move(terms));
}

// ---------------------------------------------------------------- vector partitions

namespace {

// Canonical root list: alpha1 first, then (a1, d) = (-1, d), (0, d), (1, d)
// for d = 1, 2, ...
Weight root_at(std::size_t idx) {
  if (idx == 0) return kAlpha1;
  const auto d = static_cast<std::int64_t>((idx - 1) / 3 + 1);
  const auto a1 = static_cast<std::int64_t>((idx - 1) % 3) - 1;
  return {0, a1, d};
}

}  // namespace

VectorPartitionMemo& VectorPartitionMemo::shared() {
  static VectorPartitionMemo memo;
  return memo;
}

Integer VectorPartitionMemo::count(const Weight& mu, std::optional<Weight> excluded) {
  std::int64_t ex = -1;
  if (excluded) {
    if (!is_positive_root(*excluded))
      throw std::invalid_argument("vector_partition: excluded weight is not a positive root");
    ex = static_cast<std::int64_t>(positive_root_index(*excluded));
  }
  if (mu.l0 != 0 || mu.d < 0) return 0;
  return count_from(mu, static_cast<std::size_t>(3 * mu.d), ex);
}

Integer VectorPartitionMemo::count_from(const Weight& mu, std::size_t idx, std::int64_t excluded) {
  if (mu.d < 0 || mu.a1 < -mu.d) return 0;
  if (idx == 0) {
    if (excluded == 0) return mu.is_zero() ? 1 : 0;
    return (mu.d == 0 && mu.a1 >= 0) ? 1 : 0;
  }
  // Roots above the current delta-budget contribute nothing.
  const auto top = static_cast<std::size_t>(3 * mu.d);
  if (idx > top) idx = top;
  if (idx == 0) return count_from(mu, 0, excluded);

  const Key key{mu, idx, excluded};
  {
    std::shared_lock lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  Integer total = 0;
  if (static_cast<std::int64_t>(idx) == excluded) {
    total = count_from(mu, idx - 1, excluded);
  } else {
    const Weight r = root_at(idx);
    for (Weight rest = mu; rest.d >= 0; rest -= r) total += count_from(rest, idx - 1, excluded);
  }
  std::unique_lock lock(mu_);
  memo_.emplace(key, total);
  return total;
}

Integer vector_partition(const Weight& mu, std::optional<Weight> excluded) {
  return VectorPartitionMemo::shared().count(mu, excluded);
}

}  // namespace loopchar
