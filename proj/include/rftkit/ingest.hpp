/**
 * @file ingest.hpp
 * @brief Delimited-text ingestion, detrending and stable TSV/JSON writers.
 *
 * SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 rftkit contributors
 */
#pragma once

#include <string>

#include "rftkit/spectral.hpp"
#include "rftkit/time_series.hpp"
#include "rftkit/transform.hpp"

namespace rftkit {

/// What to do with cells that are missing, unparsable or non-finite.
enum class NaPolicy { fail, drop, interpolate };

const char* to_string(NaPolicy policy);

struct LoadSpec {
  std::string path;
  char delimiter = ',';
  std::size_t column = 0;       ///< zero-based value column
  std::size_t skip_header = 0;  ///< leading lines to discard
  NaPolicy na_policy = NaPolicy::fail;
};

/// One sample per retained line, in file order. Under fail the first bad
/// cell raises std::runtime_error naming the line and column; drop skips the
/// line; interpolate fills gaps linearly between finite neighbours and
/// errors when a gap touches either end. An empty result is an error.
TimeSeries load_series(const LoadSpec& spec);

enum class DetrendMode { none, mean, linear };

const char* to_string(DetrendMode mode);

/// mean subtracts the sample mean; linear subtracts the least-squares line
/// over n (needs t >= 2); none copies.
TimeSeries detrend(const TimeSeries& series, DetrendMode mode);

enum class FileFormat { tsv, json };

/// TSV: header line plus (q, a_q) columns, 17 significant digits so doubles
/// survive a text round trip. JSON: metadata (t, q_max, reducer, source,
/// seed when present) plus the raw coefficients.
void write_spectrum(const RftSpectrum& spectrum, const std::string& path,
                    FileFormat format);

/// TSV columns are (f, power); JSON metadata carries t, bin count and the
/// window tag.
void write_spectrum(const FourierSpectrum& spectrum, const std::string& path,
                    FileFormat format);

RftSpectrum read_rft_spectrum_json(const std::string& path);
FourierSpectrum read_fourier_spectrum_json(const std::string& path);

/// One sample per line at 17 significant digits; readable back through
/// load_series with default settings.
void write_series(const TimeSeries& series, const std::string& path);

}  // namespace rftkit
