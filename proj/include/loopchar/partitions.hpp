#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "loopchar/charalg.hpp"
#include "loopchar/weights.hpp"

namespace loopchar {

/// Memoized counts of integer partitions.
///
/// P_{n,k}(m) counts partitions of m into at most n parts, each at most k;
/// q_{n,k}(m) the ones with exactly n parts; P(m) all partitions. The
/// coefficient lists of the Gaussian binomials are built by
/// G_{n,k} = G_{n,k-1} + q^k G_{n-1,k} and cached per (n, k). Thread safe.
class PartitionTable {
 public:
  Integer p_restricted(std::int64_t n, std::int64_t k, std::int64_t m);
  Integer q_exact(std::int64_t n, std::int64_t k, std::int64_t m);
  Integer p_all(std::int64_t m);

  /// Coefficients of sum_j P_{n,k}(j) x^j (length n*k + 1).
  std::vector<Integer> gaussian(std::int64_t n, std::int64_t k);

  /// Process-wide instance.
  static PartitionTable& shared();

 private:
  const std::vector<Integer>& gaussian_locked(std::int64_t n, std::int64_t k);

  std::mutex mu_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Integer>> gauss_;
};

Integer p_restricted(std::int64_t n, std::int64_t k, std::int64_t m);
Integer q_exact(std::int64_t n, std::int64_t k, std::int64_t m);
Integer p_all(std::int64_t m);

bool conjugate_symmetry_check(std::int64_t a, std::int64_t b, std::int64_t j);

/// P_{a,b}(j) + P_{a+1,b-1}(j-a-1) = P_{a+1,b}(j).
bool identity_part(std::int64_t a, std::int64_t b, std::int64_t j);
/// P_{a+1,b-1}(j) + P_{a,b}(j-b) = P_{a+1,b}(j).
bool identity_partcor(std::int64_t a, std::int64_t b, std::int64_t j);
/// The three floor/ceiling identities for k > m with k - m odd. Returns false
/// when the hypothesis fails.
bool identity_elem(std::int64_t k, std::int64_t m);

/// sum_j P_{n,k}(j) e^{j delta}.
LaurentPoly partition_series(std::int64_t n, std::int64_t k);

/// Number of ways to write mu as a nonnegative combination of positive roots
/// of affine sl2 (imaginary roots with multiplicity one), optionally leaving
/// out one positive root. Zero unless mu has level 0 and d >= 0. Throws
/// std::invalid_argument if `excluded` is not a positive root.
Integer vector_partition(const Weight& mu, std::optional<Weight> excluded = std::nullopt);

/// Memo for vector_partition; concurrent readers, locked writers.
class VectorPartitionMemo {
 public:
  Integer count(const Weight& mu, std::optional<Weight> excluded);
  static VectorPartitionMemo& shared();

 private:
  using Key = std::tuple<Weight, std::size_t, std::int64_t>;
  Integer count_from(const Weight& mu, std::size_t idx, std::int64_t excluded);
  std::shared_mutex mu_;
  std::map<Key, Integer> memo_;
};

}  // namespace loopchar
