/**
 * @file synth.hpp
 * @brief Deterministic synthetic signal generators: cosine, period-modulated
 *        cosine, Brownian walk and white noise.
 *
 * SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 rftkit contributors
 */
#pragma once

#include <cstdint>

#include "rftkit/time_series.hpp"

namespace rftkit {

/// a(n) = a0 * cos(2 pi n / n0 + delta), n = 1..t.
struct CosineSpec {
  std::int64_t n0 = 10;  ///< period in samples, >= 2
  double delta = 0.0;    ///< phase delay in radians
  double a0 = 1.0;       ///< amplitude
  std::size_t t = 100;   ///< sample count, >= 1
};

/// How the swept period n0 * (1 + sin(2 pi n / n1)) enters the cosine:
/// substituted into the argument directly, or integrated as instantaneous
/// phase. phase_accumulated is the default elsewhere since a modulated
/// period describes the instantaneous cycle length.
enum class ModulationMode { instantaneous, phase_accumulated };

const char* to_string(ModulationMode mode);

struct ModulatedCosineSpec {
  std::int64_t n0 = 10;  ///< carrier period, >= 2
  std::int64_t n1 = 14;  ///< modulation period, >= 2
  std::size_t t = 2000;  ///< sample count, >= 1
  ModulationMode mode = ModulationMode::phase_accumulated;
};

TimeSeries gen_cosine(const CosineSpec& spec);

/// The modulation index is 1, so the instantaneous period sweeps 0..2*n0.
/// The denominator is clamped below by 1e-6 * n0 at the grid points where
/// 1 + sin(2 pi n / n1) reaches zero (only possible when 4 divides n1).
TimeSeries gen_modulated_cosine(const ModulatedCosineSpec& spec);

/// Cumulative sum of gen_white_noise(t, seed); differencing the output
/// recovers that sequence exactly. Requires t >= 2.
TimeSeries gen_brownian(std::size_t t, std::uint64_t seed);

/// I.i.d. standard normal samples from mt19937_64 raw output mapped through
/// Box-Muller. Both pieces are published, fully specified algorithms, so the
/// sequence is reproducible bit-for-bit from the seed on any platform.
TimeSeries gen_white_noise(std::size_t t, std::uint64_t seed);

}  // namespace rftkit
