/**
 * @file arith.cpp
 *
 * SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 rftkit contributors
 */
#include "rftkit/arith.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rftkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_in_cache(std::int64_t q, const ArithCache& cache, const char* what) {
  if (q < 1 || q > cache.limit()) {
    throw std::out_of_range(std::string(what) + ": q = " + std::to_string(q) +
                            " outside cache range [1, " +
                            std::to_string(cache.limit()) + "]");
  }
}

}  // namespace

ArithCache::ArithCache(std::int64_t limit) : limit_(limit) {
  if (limit < 1) {
    throw std::invalid_argument("ArithCache: limit must be >= 1");
  }
  if (limit > std::numeric_limits<std::int32_t>::max()) {
    throw std::invalid_argument("ArithCache: limit exceeds 32-bit sieve range");
  }
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  phi_.assign(static_cast<std::size_t>(limit) + 1, 0);
  mu_.assign(static_cast<std::size_t>(limit) + 1, 0);
  phi_[1] = 1;
  mu_[1] = 1;

  // Linear sieve: each composite is struck exactly once, by its smallest
  // prime factor, which lets phi and mu be filled in the same pass.
  std::vector<std::int32_t> primes;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::int32_t>(i);
      phi_[i] = i - 1;
      mu_[i] = -1;
      primes.push_back(static_cast<std::int32_t>(i));
    }
    for (std::int32_t p : primes) {
      if (p > spf_[i] || i * p > limit) break;
      const std::int64_t ip = i * p;
      spf_[ip] = p;
      if (p == spf_[i]) {
        phi_[ip] = phi_[i] * p;
        mu_[ip] = 0;
        break;
      }
      phi_[ip] = phi_[i] * (p - 1);
      mu_[ip] = static_cast<std::int8_t>(-mu_[i]);
    }
  }
}

std::int64_t ArithCache::phi(std::int64_t q) const {
  check_in_cache(q, *this, "ArithCache::phi");
  return phi_[q];
}

int ArithCache::mu(std::int64_t q) const {
  check_in_cache(q, *this, "ArithCache::mu");
  return mu_[q];
}

std::int64_t ArithCache::smallest_prime_factor(std::int64_t q) const {
  if (q < 2 || q > limit_) {
    throw std::out_of_range("ArithCache::smallest_prime_factor: q = " +
                            std::to_string(q) + " outside [2, " +
                            std::to_string(limit_) + "]");
  }
  return spf_[q];
}

std::int64_t ramanujan_sum(std::int64_t q, std::int64_t n, const ArithCache& cache) {
  check_in_cache(q, cache, "ramanujan_sum");
  if (n < 0) {
    throw std::invalid_argument("ramanujan_sum: n must be >= 0");
  }
  const std::int64_t q1 = std::gcd(q, n);  // gcd(q, 0) == q
  const std::int64_t d = q / q1;
  const int mu_d = cache.mu(d);
  if (mu_d == 0) return 0;
  return mu_d * (cache.phi(q) / cache.phi(d));  // phi(d) | phi(q) for d | q
}

double ramanujan_sum_direct(std::int64_t q, std::int64_t n) {
  if (q < 1) {
    throw std::invalid_argument("ramanujan_sum_direct: q must be >= 1");
  }
  if (n < 0) {
    throw std::invalid_argument("ramanujan_sum_direct: n must be >= 0");
  }
  const std::int64_t nm = n % q;
  double sum = 0.0;
  for (std::int64_t p = 1; p <= q; ++p) {
    if (std::gcd(p, q) != 1) continue;
    // Reduce p*n mod q before forming the angle so the cosine argument
    // stays in [0, 2 pi) regardless of n.
    const std::int64_t r =
        static_cast<std::int64_t>((static_cast<__int128>(p) * nm) % q);
    sum += std::cos(2.0 * kPi * static_cast<double>(r) / static_cast<double>(q));
  }
  return sum;
}

std::vector<std::int64_t> ramanujan_period(std::int64_t q, const ArithCache& cache) {
  check_in_cache(q, cache, "ramanujan_period");
  std::vector<std::int64_t> period(static_cast<std::size_t>(q));
  for (std::int64_t r = 0; r < q; ++r) {
    const std::int64_t q1 = std::gcd(q, r);
    const std::int64_t d = q / q1;
    const int mu_d = cache.mu(d);
    period[r] = (mu_d == 0) ? 0 : mu_d * (cache.phi(q) / cache.phi(d));
  }
  return period;
}

double sigma_ratio_expansion(std::int64_t n, std::int64_t q_limit,
                             const ArithCache& cache) {
  if (n < 1) {
    throw std::invalid_argument("sigma_ratio_expansion: n must be >= 1");
  }
  check_in_cache(q_limit, cache, "sigma_ratio_expansion");
  const double scale = kPi * kPi / 6.0;
  double sum = 0.0;
  for (std::int64_t q = 1; q <= q_limit; ++q) {
    const std::int64_t q1 = std::gcd(q, n);
    const std::int64_t d = q / q1;
    const int mu_d = cache.mu(d);
    if (mu_d == 0) continue;
    const std::int64_t cq = mu_d * (cache.phi(q) / cache.phi(d));
    sum += scale * static_cast<double>(cq) /
           (static_cast<double>(q) * static_cast<double>(q));
  }
  return sum;
}

}  // namespace rftkit
