/**
 * @file ingest.cpp
 *
 * SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 rftkit contributors
 */
#include "rftkit/ingest.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace rftkit {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

/// Empty, unparsable and non-finite cells all count as missing; the series
/// invariant requires finite values.
std::optional<double> parse_cell(std::string_view cell) {
  cell = trim(cell);
  if (cell.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<std::string_view> nth_field(std::string_view line, char delimiter,
                                          std::size_t index) {
  std::size_t start = 0;
  for (std::size_t field = 0;; ++field) {
    const std::size_t end = line.find(delimiter, start);
    if (field == index) {
      return line.substr(start, end == std::string_view::npos ? line.size() - start
                                                              : end - start);
    }
    if (end == std::string_view::npos) return std::nullopt;
    start = end + 1;
  }
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::ofstream open_out(const std::string& path, const char* what) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error(std::string(what) + ": cannot write " + path);
  }
  return out;
}

void finish_out(std::ofstream& out, const std::string& path, const char* what) {
  out.flush();
  if (!out) {
    throw std::runtime_error(std::string(what) + ": I/O failure writing " + path);
  }
}

json spectrum_meta(const std::string& source,
                   const std::optional<std::uint64_t>& seed) {
  json j;
  j["source"] = source;
  if (seed) j["seed"] = *seed;
  return j;
}

json load_json(const std::string& path, const char* what, const char* type) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error(std::string(what) + ": cannot open " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string(what) + ": " + path + ": " + e.what());
  }
  if (!j.is_object() || j.value("type", "") != type) {
    throw std::runtime_error(std::string(what) + ": " + path +
                             " is not a " + type + " file");
  }
  return j;
}

}  // namespace

const char* to_string(NaPolicy policy) {
  switch (policy) {
    case NaPolicy::fail: return "fail";
    case NaPolicy::drop: return "drop";
    case NaPolicy::interpolate: return "interpolate";
  }
  return "?";
}

const char* to_string(DetrendMode mode) {
  switch (mode) {
    case DetrendMode::none: return "none";
    case DetrendMode::mean: return "mean";
    case DetrendMode::linear: return "linear";
  }
  return "?";
}

TimeSeries load_series(const LoadSpec& spec) {
  std::ifstream in(spec.path);
  if (!in) {
    throw std::runtime_error("load_series: cannot open " + spec.path);
  }

  struct Cell {
    std::optional<double> value;
    std::size_t line;  // 1-based, counting header lines
  };
  std::vector<Cell> cells;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no <= spec.skip_header) continue;
    const auto field = nth_field(line, spec.delimiter, spec.column);
    const auto value = field ? parse_cell(*field) : std::nullopt;
    if (!value && spec.na_policy == NaPolicy::fail) {
      throw std::runtime_error("load_series: unparsable value at line " +
                               std::to_string(line_no) + ", column " +
                               std::to_string(spec.column) + " of " + spec.path);
    }
    cells.push_back({value, line_no});
  }

  TimeSeries series;
  series.label = spec.path;
  if (spec.na_policy == NaPolicy::drop) {
    for (const Cell& c : cells) {
      if (c.value) series.values.push_back(*c.value);
    }
  } else if (spec.na_policy == NaPolicy::interpolate) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].value) {
        series.values.push_back(*cells[i].value);
        continue;
      }
      std::size_t j = i;
      while (j < cells.size() && !cells[j].value) ++j;
      if (i == 0 || j == cells.size()) {
        throw std::runtime_error(
            "load_series: cannot interpolate missing value at line " +
            std::to_string(cells[i].line) + " of " + spec.path +
            " (gap touches the series boundary)");
      }
      const double left = *cells[i - 1].value;
      const double right = *cells[j].value;
      const double gap = static_cast<double>(j - i + 1);
      for (std::size_t k = i; k < j; ++k) {
        series.values.push_back(left + (right - left) *
                                           static_cast<double>(k - i + 1) / gap);
      }
      i = j - 1;
    }
  } else {  // fail: all cells were parsed or we already threw
    for (const Cell& c : cells) series.values.push_back(*c.value);
  }

  if (series.values.empty()) {
    throw std::runtime_error("load_series: no samples in " + spec.path);
  }
  return series;
}

TimeSeries detrend(const TimeSeries& series, DetrendMode mode) {
  const std::size_t t = series.length();
  if (t == 0) {
    throw std::invalid_argument("detrend: empty series");
  }
  TimeSeries out = series;
  if (mode == DetrendMode::none) return out;

  if (mode == DetrendMode::mean) {
    double mean = 0.0;
    for (double v : series.values) mean += v;
    mean /= static_cast<double>(t);
    for (double& v : out.values) v -= mean;
    return out;
  }

  // linear: ordinary least squares of a(n) against n = 1..t
  if (t < 2) {
    throw std::invalid_argument("detrend: linear mode needs t >= 2");
  }
  const double n_bar = 0.5 * static_cast<double>(t + 1);
  double y_bar = 0.0;
  for (double v : series.values) y_bar += v;
  y_bar /= static_cast<double>(t);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t n = 1; n <= t; ++n) {
    const double dx = static_cast<double>(n) - n_bar;
    sxx += dx * dx;
    sxy += dx * (series.values[n - 1] - y_bar);
  }
  const double slope = sxy / sxx;
  const double intercept = y_bar - slope * n_bar;
  for (std::size_t n = 1; n <= t; ++n) {
    out.values[n - 1] -= intercept + slope * static_cast<double>(n);
  }
  return out;
}

void write_spectrum(const RftSpectrum& spectrum, const std::string& path,
                    FileFormat format) {
  auto out = open_out(path, "write_spectrum");
  if (format == FileFormat::tsv) {
    out << "q\ta_q\n";
    for (std::size_t q = 1; q <= spectrum.q_max(); ++q) {
      out << q << '\t' << format_double(spectrum.coefficients[q - 1]) << '\n';
    }
  } else {
    json j = spectrum_meta(spectrum.source, spectrum.seed);
    j["type"] = "rft_spectrum";
    j["t"] = spectrum.t;
    j["q_max"] = spectrum.q_max();
    j["delay_reducer"] = to_string(spectrum.delay_reducer);
    j["coefficients"] = spectrum.coefficients;
    out << j.dump(2) << '\n';
  }
  finish_out(out, path, "write_spectrum");
}

void write_spectrum(const FourierSpectrum& spectrum, const std::string& path,
                    FileFormat format) {
  auto out = open_out(path, "write_spectrum");
  if (format == FileFormat::tsv) {
    out << "f\tpower\n";
    for (std::size_t k = 1; k <= spectrum.bins(); ++k) {
      out << format_double(spectrum.frequency(k)) << '\t'
          << format_double(spectrum.power[k - 1]) << '\n';
    }
  } else {
    json j = spectrum_meta(spectrum.source, spectrum.seed);
    j["type"] = "fourier_spectrum";
    j["t"] = spectrum.t;
    j["bins"] = spectrum.bins();
    j["window"] = to_string(spectrum.window);
    j["power"] = spectrum.power;
    out << j.dump(2) << '\n';
  }
  finish_out(out, path, "write_spectrum");
}

RftSpectrum read_rft_spectrum_json(const std::string& path) {
  const json j = load_json(path, "read_rft_spectrum_json", "rft_spectrum");
  RftSpectrum spectrum;
  spectrum.coefficients = j.at("coefficients").get<std::vector<double>>();
  spectrum.t = j.at("t").get<std::size_t>();
  spectrum.source = j.value("source", "");
  if (j.contains("seed")) spectrum.seed = j["seed"].get<std::uint64_t>();
  const std::string reducer = j.value("delay_reducer", "none");
  spectrum.delay_reducer = reducer == "rms"        ? DelayReducer::rms
                           : reducer == "mean-abs" ? DelayReducer::mean_abs
                                                   : DelayReducer::none;
  return spectrum;
}

FourierSpectrum read_fourier_spectrum_json(const std::string& path) {
  const json j = load_json(path, "read_fourier_spectrum_json", "fourier_spectrum");
  FourierSpectrum spectrum;
  spectrum.power = j.at("power").get<std::vector<double>>();
  spectrum.t = j.at("t").get<std::size_t>();
  spectrum.source = j.value("source", "");
  if (j.contains("seed")) spectrum.seed = j["seed"].get<std::uint64_t>();
  spectrum.window = j.value("window", "none") == std::string("hann") ? Window::hann
                                                                     : Window::none;
  return spectrum;
}

void write_series(const TimeSeries& series, const std::string& path) {
  auto out = open_out(path, "write_series");
  for (double v : series.values) {
    out << format_double(v) << '\n';
  }
  finish_out(out, path, "write_series");
}

}  // namespace rftkit
