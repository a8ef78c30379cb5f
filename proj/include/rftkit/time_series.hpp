/**
 * @file time_series.hpp
 * @brief Real-valued sampled sequence shared by all transforms.
 *
 * SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 rftkit contributors
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rftkit {

/// Samples a(n) for n = 1..t, stored at values[n-1]. All values are finite;
/// ingestion and the generators enforce this.
struct TimeSeries {
  std::vector<double> values;
  std::string label;                  ///< free-text provenance
  std::optional<std::uint64_t> seed;  ///< generator seed, when synthetic

  std::size_t length() const { return values.size(); }

  /// 1-based sample access, matching the a(n) indexing convention.
  double at(std::size_t n) const { return values[n - 1]; }
};

}  // namespace rftkit
