/**
 * @file arith.hpp
 * @brief Exact integer number theory: sieve tables, Euler totient, Moebius
 *        function and Ramanujan sums.
 *
 * SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 rftkit contributors
 */
#pragma once

#include <cstdint>
#include <vector>

namespace rftkit {

/// Precomputed smallest-prime-factor, totient and Moebius tables for
/// 1..limit, built in one linear sieve pass. Immutable after construction
/// and safe for concurrent reads.
class ArithCache {
 public:
  /// Throws std::invalid_argument for limit < 1.
  explicit ArithCache(std::int64_t limit);

  std::int64_t limit() const { return limit_; }

  /// Euler totient phi(q). Throws std::out_of_range unless 1 <= q <= limit().
  std::int64_t phi(std::int64_t q) const;

  /// Moebius mu(q), in {-1, 0, +1}. Throws std::out_of_range unless
  /// 1 <= q <= limit().
  int mu(std::int64_t q) const;

  /// Smallest prime factor of q. Throws std::out_of_range unless
  /// 2 <= q <= limit(). Repeated division by this recovers the factorization.
  std::int64_t smallest_prime_factor(std::int64_t q) const;

 private:
  std::int64_t limit_;
  std::vector<std::int32_t> spf_;
  std::vector<std::int64_t> phi_;
  std::vector<std::int8_t> mu_;
};

/// Ramanujan sum c_q(n) via the closed form mu(q/q1) * phi(q) / phi(q/q1)
/// with q1 = gcd(q, n). The division is exact, so the result is an exact
/// integer. gcd(q, 0) = q, hence c_q(0) = phi(q).
///
/// Requires 1 <= q <= cache.limit() and n >= 0.
std::int64_t ramanujan_sum(std::int64_t q, std::int64_t n, const ArithCache& cache);

/// Brute-force c_q(n): sum of cos(2 pi p n / q) over the p in [1, q] coprime
/// to q (imaginary parts cancel pairwise). O(q log q); kept as the
/// independent cross-check for ramanujan_sum.
double ramanujan_sum_direct(std::int64_t q, std::int64_t n);

/// One period of c_q: entry r holds c_q(n) for any n with n mod q == r.
std::vector<std::int64_t> ramanujan_period(std::int64_t q, const ArithCache& cache);

/// Truncated expansion sum_{q=1}^{Q} pi^2 / (6 q^2) * c_q(n) of the relative
/// divisor sum sigma(n)/n. Since |c_q(n)| <= n, the truncation error is
/// bounded by pi^2 * n / (6 Q); choose Q accordingly for a target tolerance.
double sigma_ratio_expansion(std::int64_t n, std::int64_t q_limit, const ArithCache& cache);

}  // namespace rftkit
