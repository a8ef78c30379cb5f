/**
 * @file synth.cpp
 *
 * SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 rftkit contributors
 */
#include "rftkit/synth.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace rftkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Uniform doubles from the raw 64-bit stream: the high 53 bits, shifted
/// into (0, 1] for the log input and [0, 1) for the angle.
double unit_open_low(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

double unit_closed_low(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

const char* to_string(ModulationMode mode) {
  switch (mode) {
    case ModulationMode::instantaneous: return "inst";
    case ModulationMode::phase_accumulated: return "phase";
  }
  return "?";
}

TimeSeries gen_cosine(const CosineSpec& spec) {
  if (spec.n0 < 2) {
    throw std::invalid_argument("gen_cosine: n0 must be >= 2");
  }
  if (spec.t < 1) {
    throw std::invalid_argument("gen_cosine: t must be >= 1");
  }
  if (!std::isfinite(spec.a0) || !std::isfinite(spec.delta)) {
    throw std::invalid_argument("gen_cosine: a0 and delta must be finite");
  }
  TimeSeries series;
  series.values.resize(spec.t);
  for (std::size_t n = 1; n <= spec.t; ++n) {
    series.values[n - 1] =
        spec.a0 * std::cos(2.0 * kPi * static_cast<double>(n) /
                               static_cast<double>(spec.n0) +
                           spec.delta);
  }
  std::ostringstream label;
  label << "cosine(n0=" << spec.n0 << ", delta=" << spec.delta
        << ", a0=" << spec.a0 << ", t=" << spec.t << ")";
  series.label = label.str();
  return series;
}

TimeSeries gen_modulated_cosine(const ModulatedCosineSpec& spec) {
  if (spec.n0 < 2 || spec.n1 < 2) {
    throw std::invalid_argument("gen_modulated_cosine: n0 and n1 must be >= 2");
  }
  if (spec.t < 1) {
    throw std::invalid_argument("gen_modulated_cosine: t must be >= 1");
  }
  const double n0 = static_cast<double>(spec.n0);
  const double n1 = static_cast<double>(spec.n1);
  const double floor = 1e-6 * n0;  // 1 + sin can reach zero when 4 | n1

  TimeSeries series;
  series.values.resize(spec.t);
  if (spec.mode == ModulationMode::instantaneous) {
    for (std::size_t n = 1; n <= spec.t; ++n) {
      const double period =
          n0 * (1.0 + std::sin(2.0 * kPi * static_cast<double>(n) / n1));
      series.values[n - 1] =
          std::cos(2.0 * kPi * static_cast<double>(n) / std::max(period, floor));
    }
  } else {
    double phase = 0.0;
    for (std::size_t n = 1; n <= spec.t; ++n) {
      series.values[n - 1] = std::cos(phase);
      const double period =
          n0 * (1.0 + std::sin(2.0 * kPi * static_cast<double>(n) / n1));
      phase += 2.0 * kPi / std::max(period, floor);
    }
  }
  std::ostringstream label;
  label << "modcos(n0=" << spec.n0 << ", n1=" << spec.n1 << ", t=" << spec.t
        << ", mode=" << to_string(spec.mode) << ")";
  series.label = label.str();
  return series;
}

TimeSeries gen_white_noise(std::size_t t, std::uint64_t seed) {
  if (t < 1) {
    throw std::invalid_argument("gen_white_noise: t must be >= 1");
  }
  std::mt19937_64 engine(seed);
  TimeSeries series;
  series.values.reserve(t + 1);
  while (series.values.size() < t) {
    // Box-Muller on two raw draws; avoids the unspecified consumption
    // pattern of std::normal_distribution so goldens hold everywhere.
    const double u1 = unit_open_low(engine());
    const double u2 = unit_closed_low(engine());
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    series.values.push_back(radius * std::cos(angle));
    series.values.push_back(radius * std::sin(angle));
  }
  series.values.resize(t);
  std::ostringstream label;
  label << "white-noise(mt19937_64/box-muller, seed=" << seed << ", t=" << t << ")";
  series.label = label.str();
  series.seed = seed;
  return series;
}

TimeSeries gen_brownian(std::size_t t, std::uint64_t seed) {
  if (t < 2) {
    throw std::invalid_argument("gen_brownian: t must be >= 2");
  }
  TimeSeries series = gen_white_noise(t, seed);
  for (std::size_t i = 1; i < t; ++i) {
    series.values[i] += series.values[i - 1];
  }
  std::ostringstream label;
  label << "brownian(mt19937_64/box-muller, seed=" << seed << ", t=" << t << ")";
  series.label = label.str();
  return series;
}

}  // namespace rftkit
