/**
 * @file transform.hpp
 * @brief Ramanujan-Fourier transform: forward coefficients, reconstruction,
 *        autocorrelation, Wiener-Khintchine check and shift averaging.
 *
 * SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 rftkit contributors
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rftkit/arith.hpp"
#include "rftkit/time_series.hpp"

namespace rftkit {

/// How (if at all) coefficients from shifted sub-series were combined.
enum class DelayReducer { none, rms, mean_abs };

const char* to_string(DelayReducer reducer);

/// Ramanujan-Fourier spectrum. coefficients[q-1] holds a_q for q = 1..q_max.
/// Coefficients are signed reals; peaks can be positive or negative.
struct RftSpectrum {
  std::vector<double> coefficients;
  std::size_t t = 0;  ///< sample length the averages were taken over
  DelayReducer delay_reducer = DelayReducer::none;
  std::string source;
  std::optional<std::uint64_t> seed;

  std::size_t q_max() const { return coefficients.size(); }

  /// 1-based coefficient access: at(q) == a_q.
  double at(std::size_t q) const { return coefficients[q - 1]; }
};

/// Finite-sample autocorrelation values R(h) for h = 0..h_max, stored at
/// values[h]. R(0) >= |R(h)| is not guaranteed for non-stationary input.
struct AutocorrelationTable {
  std::vector<double> values;

  std::size_t h_max() const { return values.empty() ? 0 : values.size() - 1; }
};

/// One row of the Wiener-Khintchine comparison: autocorrelation on the left,
/// the c_q-weighted coefficient sum on the right.
struct WkRow {
  std::size_t h;
  double lhs;
  double rhs;
  double residual;
};

/// Finite-t estimate (1/t) * sum a(n) of the mean value.
/// Throws std::invalid_argument on an empty series.
double mean_value(const TimeSeries& series);

/// Forward transform: a_q = sum_{n=1..t} a(n) c_q(n) / (phi(q) * t) for
/// q = 1..q_max. Per-q sums run in ascending n, so results are deterministic.
/// Throws std::out_of_range if q_max > cache.limit().
RftSpectrum rft_forward(const TimeSeries& series, std::size_t q_max,
                        const ArithCache& cache);

/// Evaluates the expansion sum_q a_q c_q(n) for n in [n_from, n_to].
TimeSeries rft_reconstruct(const RftSpectrum& spectrum, std::size_t n_from,
                           std::size_t n_to, const ArithCache& cache);

/// R(h) = sum_{n=1..t-h} a(n) a(n+h) / (t - h), h = 0..h_max. The t-h
/// divisor keeps full-period checks on short series exact; h_max must be
/// < t (std::out_of_range otherwise).
AutocorrelationTable autocorrelation(const TimeSeries& series, std::size_t h_max);

/// Tabulates lhs = R(h) against rhs = sum_q a_q^2 c_q(h) for h = 0..h_max.
/// The spectrum should come from the same series for the comparison to be
/// meaningful.
std::vector<WkRow> wk_check(const TimeSeries& series, const RftSpectrum& spectrum,
                            std::size_t h_max, const ArithCache& cache);

/// Transforms the num_shifts sub-series starting at offsets 0..num_shifts-1
/// (each truncated to length t - num_shifts + 1) and combines per-q
/// coefficients with the reducer. Plain signed averaging over a full cycle
/// of shifts cancels to zero, so only rms and mean_abs are accepted.
/// num_shifts >= t throws std::out_of_range.
RftSpectrum phase_averaged_rft(const TimeSeries& series, std::size_t num_shifts,
                               std::size_t q_max, DelayReducer reducer,
                               const ArithCache& cache);

}  // namespace rftkit
