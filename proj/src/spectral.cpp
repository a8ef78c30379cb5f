/**
 * @file spectral.cpp
 *
 * SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 rftkit contributors
 */
#include "rftkit/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rftkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

const char* to_string(Window window) {
  switch (window) {
    case Window::none: return "none";
    case Window::hann: return "hann";
  }
  return "?";
}

namespace detail {

void fft_radix2(std::vector<std::complex<double>>& data, bool inverse) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("fft_radix2: size must be a power of two");
  }
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> u = data[i + j];
        const std::complex<double> v = data[i + j + len / 2] * w;
        data[i + j] = u + v;
        data[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& c : data) c *= scale;
  }
}

std::vector<std::complex<double>> dft_bluestein(const std::vector<std::complex<double>>& x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  const std::size_t m = next_power_of_two(2 * n - 1);

  // Chirp w_k = exp(-i pi k^2 / n); k^2 is reduced mod 2n so the angle stays
  // bounded and does not lose precision for large k.
  std::vector<std::complex<double>> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t k2 = (k * k) % (2 * n);
    const double angle = -kPi * static_cast<double>(k2) / static_cast<double>(n);
    chirp[k] = {std::cos(angle), std::sin(angle)};
  }

  std::vector<std::complex<double>> a(m, {0.0, 0.0});
  std::vector<std::complex<double>> b(m, {0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
  b[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) {
    b[k] = b[m - k] = std::conj(chirp[k]);
  }

  fft_radix2(a, false);
  fft_radix2(b, false);
  for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
  fft_radix2(a, true);

  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * chirp[k];
  return out;
}

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x) {
  if (is_power_of_two(x.size())) {
    auto data = x;
    fft_radix2(data, false);
    return data;
  }
  return dft_bluestein(x);
}

}  // namespace detail

FourierSpectrum dft_power(const TimeSeries& series, Window window) {
  const std::size_t t = series.length();
  if (t < 2) {
    throw std::invalid_argument("dft_power: need at least 2 samples");
  }

  double mean = 0.0;
  for (double v : series.values) mean += v;
  mean /= static_cast<double>(t);

  std::vector<std::complex<double>> buf(t);
  for (std::size_t i = 0; i < t; ++i) {
    double v = series.values[i] - mean;
    if (window == Window::hann) {
      v *= 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) /
                                 static_cast<double>(t - 1)));
    }
    buf[i] = {v, 0.0};
  }

  const auto transformed = detail::dft(buf);

  FourierSpectrum spectrum;
  spectrum.t = t;
  spectrum.window = window;
  spectrum.source = series.label;
  spectrum.seed = series.seed;
  spectrum.power.resize(t / 2);
  const double inv_t = 1.0 / static_cast<double>(t);
  for (std::size_t k = 1; k <= t / 2; ++k) {
    spectrum.power[k - 1] = std::norm(transformed[k] * inv_t);
  }
  return spectrum;
}

SlopeFit fit_slope(const FourierSpectrum& spectrum, double f_lo, double f_hi) {
  if (!(f_lo > 0.0) || !(f_lo < f_hi)) {
    throw std::invalid_argument("fit_slope: need 0 < f_lo < f_hi");
  }

  double sx = 0.0, sy = 0.0;
  std::size_t used = 0, skipped = 0;
  for (std::size_t k = 1; k <= spectrum.bins(); ++k) {
    const double f = spectrum.frequency(k);
    if (f < f_lo || f > f_hi) continue;
    if (spectrum.power[k - 1] <= 0.0) {
      ++skipped;
      continue;
    }
    sx += std::log(f);
    sy += std::log(spectrum.power[k - 1]);
    ++used;
  }
  if (used < 8) {
    throw std::runtime_error("fit_slope: insufficient data: only " +
                             std::to_string(used) +
                             " usable bins in band (need 8)");
  }

  const double x_bar = sx / static_cast<double>(used);
  const double y_bar = sy / static_cast<double>(used);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t k = 1; k <= spectrum.bins(); ++k) {
    const double f = spectrum.frequency(k);
    if (f < f_lo || f > f_hi || spectrum.power[k - 1] <= 0.0) continue;
    const double dx = std::log(f) - x_bar;
    const double dy = std::log(spectrum.power[k - 1]) - y_bar;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }

  SlopeFit fit;
  const double slope = sxy / sxx;
  fit.alpha = -slope;
  fit.intercept = y_bar - slope * x_bar;
  fit.r_squared = (syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
  fit.f_lo = f_lo;
  fit.f_hi = f_hi;
  fit.bins_used = used;
  fit.bins_skipped = skipped;
  return fit;
}

}  // namespace rftkit
