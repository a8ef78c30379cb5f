/**
 * @file spectral.hpp
 * @brief Classical DFT periodogram and 1/f^alpha slope fitting.
 *
 * SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 rftkit contributors
 */
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rftkit/time_series.hpp"

namespace rftkit {

enum class Window { none, hann };

const char* to_string(Window window);

/// Periodogram of a length-t series: power[k-1] = P(f_k) at f_k = k/t for
/// k = 1..floor(t/2). Powers are nonnegative and finite.
struct FourierSpectrum {
  std::vector<double> power;
  std::size_t t = 0;
  Window window = Window::none;
  std::string source;
  std::optional<std::uint64_t> seed;

  std::size_t bins() const { return power.size(); }
  double frequency(std::size_t k) const {
    return static_cast<double>(k) / static_cast<double>(t);
  }
};

/// Least-squares line through (log f, log P): P(f) ~ f^-alpha over the band.
struct SlopeFit {
  double alpha = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
  std::size_t bins_used = 0;
  std::size_t bins_skipped = 0;  ///< in-band bins with zero power
};

/// P(f_k) = |(1/t) sum_n a(n) w(n) e^{-2 pi i k n / t}|^2 after mean removal
/// and optional Hann windowing. Power-of-two lengths go through the radix-2
/// path directly; other lengths use the chirp transform built on zero-padded
/// radix-2 FFTs, so every length gets exact k/t bins in O(t log t).
/// Throws std::invalid_argument for t < 2.
FourierSpectrum dft_power(const TimeSeries& series, Window window);

/// Fits log P against log f over f in [f_lo, f_hi]; alpha = -slope.
/// Zero-power bins are skipped and counted. Fewer than 8 usable bins throws
/// std::runtime_error.
SlopeFit fit_slope(const FourierSpectrum& spectrum, double f_lo, double f_hi);

namespace detail {

/// In-place iterative radix-2 FFT; data.size() must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data, bool inverse);

/// Arbitrary-length DFT via Bluestein's chirp transform.
std::vector<std::complex<double>> dft_bluestein(const std::vector<std::complex<double>>& x);

/// Forward DFT of arbitrary length: radix-2 when possible, chirp otherwise.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x);

}  // namespace detail

}  // namespace rftkit
