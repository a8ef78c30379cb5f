/**
 * @file transform.cpp
 *
 * SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 rftkit contributors
 */
#include "rftkit/transform.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rftkit {

const char* to_string(DelayReducer reducer) {
  switch (reducer) {
    case DelayReducer::none: return "none";
    case DelayReducer::rms: return "rms";
    case DelayReducer::mean_abs: return "mean-abs";
  }
  return "?";
}

double mean_value(const TimeSeries& series) {
  if (series.values.empty()) {
    throw std::invalid_argument("mean_value: empty series");
  }
  double sum = 0.0;
  for (double v : series.values) sum += v;
  return sum / static_cast<double>(series.values.size());
}

RftSpectrum rft_forward(const TimeSeries& series, std::size_t q_max,
                        const ArithCache& cache) {
  const std::size_t t = series.length();
  if (t == 0) {
    throw std::invalid_argument("rft_forward: empty series");
  }
  if (q_max == 0) {
    throw std::invalid_argument("rft_forward: q_max must be >= 1");
  }
  if (static_cast<std::int64_t>(q_max) > cache.limit()) {
    throw std::out_of_range("rft_forward: q_max = " + std::to_string(q_max) +
                            " exceeds cache limit " + std::to_string(cache.limit()));
  }

  RftSpectrum spectrum;
  spectrum.coefficients.resize(q_max);
  spectrum.t = t;
  spectrum.delay_reducer = DelayReducer::none;
  spectrum.source = series.label;
  spectrum.seed = series.seed;

  for (std::size_t q = 1; q <= q_max; ++q) {
    const auto period = ramanujan_period(static_cast<std::int64_t>(q), cache);
    // Fixed ascending-n summation keeps results bit-identical across runs.
    double acc = 0.0;
    std::size_t r = 1 % q;
    for (std::size_t n = 1; n <= t; ++n) {
      acc += series.values[n - 1] * static_cast<double>(period[r]);
      if (++r == q) r = 0;
    }
    const double denom = static_cast<double>(cache.phi(static_cast<std::int64_t>(q))) *
                         static_cast<double>(t);
    spectrum.coefficients[q - 1] = acc / denom;
  }
  return spectrum;
}

TimeSeries rft_reconstruct(const RftSpectrum& spectrum, std::size_t n_from,
                           std::size_t n_to, const ArithCache& cache) {
  if (n_from < 1 || n_from > n_to) {
    throw std::invalid_argument("rft_reconstruct: need 1 <= n_from <= n_to");
  }
  const std::size_t q_max = spectrum.q_max();
  if (q_max == 0) {
    throw std::invalid_argument("rft_reconstruct: empty spectrum");
  }
  if (static_cast<std::int64_t>(q_max) > cache.limit()) {
    throw std::out_of_range("rft_reconstruct: spectrum q_max exceeds cache limit");
  }

  std::vector<std::vector<std::int64_t>> periods;
  periods.reserve(q_max);
  for (std::size_t q = 1; q <= q_max; ++q) {
    periods.push_back(ramanujan_period(static_cast<std::int64_t>(q), cache));
  }

  TimeSeries out;
  out.values.resize(n_to - n_from + 1);
  out.label = spectrum.source.empty() ? "reconstruction"
                                      : spectrum.source + " (reconstructed)";
  out.seed = spectrum.seed;
  for (std::size_t n = n_from; n <= n_to; ++n) {
    double acc = 0.0;
    for (std::size_t q = 1; q <= q_max; ++q) {
      acc += spectrum.coefficients[q - 1] *
             static_cast<double>(periods[q - 1][n % q]);
    }
    out.values[n - n_from] = acc;
  }
  return out;
}

AutocorrelationTable autocorrelation(const TimeSeries& series, std::size_t h_max) {
  const std::size_t t = series.length();
  if (t == 0) {
    throw std::invalid_argument("autocorrelation: empty series");
  }
  if (h_max >= t) {
    throw std::out_of_range("autocorrelation: h_max = " + std::to_string(h_max) +
                            " must be < t = " + std::to_string(t));
  }
  AutocorrelationTable table;
  table.values.resize(h_max + 1);
  for (std::size_t h = 0; h <= h_max; ++h) {
    double acc = 0.0;
    for (std::size_t n = 1; n + h <= t; ++n) {
      acc += series.values[n - 1] * series.values[n - 1 + h];
    }
    table.values[h] = acc / static_cast<double>(t - h);
  }
  return table;
}

std::vector<WkRow> wk_check(const TimeSeries& series, const RftSpectrum& spectrum,
                            std::size_t h_max, const ArithCache& cache) {
  const std::size_t q_max = spectrum.q_max();
  if (q_max == 0) {
    throw std::invalid_argument("wk_check: empty spectrum");
  }
  if (static_cast<std::int64_t>(q_max) > cache.limit()) {
    throw std::out_of_range("wk_check: spectrum q_max exceeds cache limit");
  }
  const AutocorrelationTable acf = autocorrelation(series, h_max);

  std::vector<std::vector<std::int64_t>> periods;
  periods.reserve(q_max);
  for (std::size_t q = 1; q <= q_max; ++q) {
    periods.push_back(ramanujan_period(static_cast<std::int64_t>(q), cache));
  }

  std::vector<WkRow> rows;
  rows.reserve(h_max + 1);
  for (std::size_t h = 0; h <= h_max; ++h) {
    double rhs = 0.0;
    for (std::size_t q = 1; q <= q_max; ++q) {
      const double aq = spectrum.coefficients[q - 1];
      rhs += aq * aq * static_cast<double>(periods[q - 1][h % q]);
    }
    rows.push_back({h, acf.values[h], rhs, acf.values[h] - rhs});
  }
  return rows;
}

RftSpectrum phase_averaged_rft(const TimeSeries& series, std::size_t num_shifts,
                               std::size_t q_max, DelayReducer reducer,
                               const ArithCache& cache) {
  const std::size_t t = series.length();
  if (num_shifts == 0) {
    throw std::invalid_argument("phase_averaged_rft: num_shifts must be >= 1");
  }
  if (num_shifts >= t) {
    throw std::out_of_range("phase_averaged_rft: num_shifts = " +
                            std::to_string(num_shifts) + " must be < t = " +
                            std::to_string(t));
  }
  if (reducer != DelayReducer::rms && reducer != DelayReducer::mean_abs) {
    throw std::invalid_argument(
        "phase_averaged_rft: reducer must be rms or mean-abs (plain signed "
        "averaging over a shift cycle cancels to zero)");
  }

  const std::size_t sub_len = t - num_shifts + 1;
  std::vector<double> acc(q_max, 0.0);
  TimeSeries sub;
  sub.values.resize(sub_len);
  for (std::size_t s = 0; s < num_shifts; ++s) {
    for (std::size_t i = 0; i < sub_len; ++i) sub.values[i] = series.values[s + i];
    const RftSpectrum part = rft_forward(sub, q_max, cache);
    for (std::size_t q = 1; q <= q_max; ++q) {
      const double aq = part.coefficients[q - 1];
      acc[q - 1] += (reducer == DelayReducer::rms) ? aq * aq : std::fabs(aq);
    }
  }

  RftSpectrum spectrum;
  spectrum.coefficients.resize(q_max);
  spectrum.t = sub_len;
  spectrum.delay_reducer = reducer;
  spectrum.source = series.label;
  spectrum.seed = series.seed;
  const double inv_shifts = 1.0 / static_cast<double>(num_shifts);
  for (std::size_t q = 1; q <= q_max; ++q) {
    spectrum.coefficients[q - 1] = (reducer == DelayReducer::rms)
                                       ? std::sqrt(acc[q - 1] * inv_shifts)
                                       : acc[q - 1] * inv_shifts;
  }
  return spectrum;
}

}  // namespace rftkit
