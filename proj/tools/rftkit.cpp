/**
 * @file rftkit.cpp
 * @brief Command-line surface: synth, rs-table, rft, fft, wk-check.
 *
 * SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 rftkit contributors
 */
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rftkit/arith.hpp"
#include "rftkit/ingest.hpp"
#include "rftkit/spectral.hpp"
#include "rftkit/synth.hpp"
#include "rftkit/transform.hpp"

namespace {

// Hard ceiling on the sieve size a single invocation may request. Scales to
// a few tens of MB of tables; anything above is almost certainly a typo.
constexpr std::int64_t kQmaxCeiling = 1'000'000;

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

rftkit::FileFormat format_from_path(const std::string& path) {
  return path.ends_with(".json") ? rftkit::FileFormat::json
                                 : rftkit::FileFormat::tsv;
}

struct RsTableArgs {
  std::int64_t q_max = 0;
  std::int64_t n_max = 0;
  std::string out;
};

struct RftArgs {
  std::string in;
  std::size_t column = 0;
  std::size_t skip = 0;
  std::int64_t q_max = 0;  // 0 = auto: min(t, 1000)
  std::string detrend = "none";
  std::size_t shifts = 1;
  std::string reducer = "rms";
  std::string out;
};

struct FftArgs {
  std::string in;
  std::string window = "none";
  std::string band;
  std::string out;
};

struct SynthArgs {
  std::string kind;
  std::int64_t n0 = 10;
  double delta = 0.0;
  std::int64_t n1 = 14;
  std::size_t t = 100;
  std::uint64_t seed = 1;
  std::string mode = "phase";
  std::string out;
};

struct WkArgs {
  std::string in;
  std::int64_t q_max = 0;   // 0 = auto: min(t, 1000)
  std::int64_t h_max = -1;  // -1 = auto: min(30, t-1)
  std::string out;
};

void check_q_max(std::int64_t q_max) {
  if (q_max < 1 || q_max > kQmaxCeiling) {
    throw std::out_of_range("q_max = " + std::to_string(q_max) +
                            " outside supported range [1, " +
                            std::to_string(kQmaxCeiling) + "]");
  }
}

rftkit::DetrendMode parse_detrend(const std::string& name) {
  if (name == "none") return rftkit::DetrendMode::none;
  if (name == "mean") return rftkit::DetrendMode::mean;
  return rftkit::DetrendMode::linear;
}

std::pair<double, double> parse_band(const std::string& band) {
  const auto colon = band.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("band must be FLO:FHI, got '" + band + "'");
  }
  try {
    const double lo = std::stod(band.substr(0, colon));
    const double hi = std::stod(band.substr(colon + 1));
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("band must be FLO:FHI, got '" + band + "'");
  }
}

void print_top_peaks(const rftkit::RftSpectrum& spectrum, std::size_t count) {
  std::vector<std::size_t> order(spectrum.q_max());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i + 1;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(spectrum.at(a)) > std::fabs(spectrum.at(b));
  });
  const std::size_t shown = std::min(count, order.size());
  for (std::size_t i = 0; i < shown; ++i) {
    std::cout << "peak q=" << order[i] << " a_q=" << fmt(spectrum.at(order[i]))
              << "\n";
  }
}

int run_rs_table(const RsTableArgs& args) {
  std::cout << "config: rftkit rs-table --qmax " << args.q_max << " --nmax "
            << args.n_max << " --out " << args.out << "\n";
  check_q_max(args.q_max);
  if (args.n_max < 1) {
    throw std::invalid_argument("n_max must be >= 1");
  }
  const rftkit::ArithCache cache(args.q_max);
  std::ofstream out(args.out);
  if (!out) {
    throw std::runtime_error("cannot write " + args.out);
  }
  for (std::int64_t q = 1; q <= args.q_max; ++q) {
    const auto period = rftkit::ramanujan_period(q, cache);
    for (std::int64_t n = 1; n <= args.n_max; ++n) {
      if (n > 1) out << ' ';
      out << period[n % q];
    }
    out << '\n';
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("I/O failure writing " + args.out);
  }
  std::cout << "wrote " << args.out << " (" << args.q_max << " x " << args.n_max
            << " table of c_q(n))\n";
  return 0;
}

int run_rft(const RftArgs& args) {
  rftkit::LoadSpec load;
  load.path = args.in;
  load.column = args.column;
  load.skip_header = args.skip;
  const rftkit::TimeSeries raw = rftkit::load_series(load);
  const std::size_t t = raw.length();

  const std::int64_t q_max =
      args.q_max > 0 ? args.q_max
                     : std::min<std::int64_t>(static_cast<std::int64_t>(t), 1000);
  std::cout << "config: rftkit rft --in " << args.in << " --col " << args.column
            << " --skip " << args.skip << " --qmax " << q_max << " --detrend "
            << args.detrend << " --shifts " << args.shifts << " --reducer "
            << args.reducer << " --out " << args.out << "\n";
  check_q_max(q_max);
  if (args.shifts < 1 || args.shifts >= t) {
    throw std::out_of_range("shifts = " + std::to_string(args.shifts) +
                            " must be in [1, t-1] with t = " + std::to_string(t));
  }

  const rftkit::TimeSeries series = rftkit::detrend(raw, parse_detrend(args.detrend));
  const rftkit::ArithCache cache(q_max);
  const rftkit::DelayReducer reducer = args.reducer == "meanabs"
                                           ? rftkit::DelayReducer::mean_abs
                                           : rftkit::DelayReducer::rms;
  const rftkit::RftSpectrum spectrum =
      args.shifts == 1
          ? rftkit::rft_forward(series, static_cast<std::size_t>(q_max), cache)
          : rftkit::phase_averaged_rft(series, args.shifts,
                                       static_cast<std::size_t>(q_max), reducer,
                                       cache);
  rftkit::write_spectrum(spectrum, args.out, format_from_path(args.out));

  std::cout << "t=" << t << " q_max=" << q_max << " delay_reducer="
            << rftkit::to_string(spectrum.delay_reducer) << "\n";
  if (static_cast<std::size_t>(q_max) > t / 2) {
    std::cout << "note: coefficients with q > t/2 = " << t / 2
              << " sit near the O(q/t) spurious floor; treat those rows with "
                 "care\n";
  }
  print_top_peaks(spectrum, 5);
  std::cout << "wrote " << args.out << "\n";
  return 0;
}

int run_fft(const FftArgs& args) {
  std::cout << "config: rftkit fft --in " << args.in << " --window " << args.window
            << " --band " << args.band << " --out " << args.out << "\n";
  const auto [f_lo, f_hi] = parse_band(args.band);
  rftkit::LoadSpec load;
  load.path = args.in;
  const rftkit::TimeSeries series = rftkit::load_series(load);

  const rftkit::Window window =
      args.window == "hann" ? rftkit::Window::hann : rftkit::Window::none;
  const rftkit::FourierSpectrum spectrum = rftkit::dft_power(series, window);
  const rftkit::SlopeFit fit = rftkit::fit_slope(spectrum, f_lo, f_hi);
  rftkit::write_spectrum(spectrum, args.out, format_from_path(args.out));

  const std::string report_path = args.out + ".slope.txt";
  {
    std::ofstream report(report_path);
    if (!report) {
      throw std::runtime_error("cannot write " + report_path);
    }
    report << "alpha\t" << fmt(fit.alpha) << "\n"
           << "intercept\t" << fmt(fit.intercept) << "\n"
           << "r_squared\t" << fmt(fit.r_squared) << "\n"
           << "f_lo\t" << fmt(fit.f_lo) << "\n"
           << "f_hi\t" << fmt(fit.f_hi) << "\n"
           << "bins_used\t" << fit.bins_used << "\n"
           << "bins_skipped\t" << fit.bins_skipped << "\n";
  }

  std::size_t dominant = 1;
  double total = 0.0;
  for (std::size_t k = 1; k <= spectrum.bins(); ++k) {
    total += spectrum.power[k - 1];
    if (spectrum.power[k - 1] > spectrum.power[dominant - 1]) dominant = k;
  }
  const double fraction =
      total > 0.0 ? spectrum.power[dominant - 1] / total : 0.0;

  std::cout << "t=" << spectrum.t << " bins=" << spectrum.bins() << " window="
            << rftkit::to_string(spectrum.window) << "\n";
  std::cout << "alpha=" << fmt(fit.alpha) << " intercept=" << fmt(fit.intercept)
            << " r_squared=" << fmt(fit.r_squared) << " bins_used="
            << fit.bins_used << " bins_skipped=" << fit.bins_skipped << "\n";
  std::cout << "dominant bin f=" << fmt(spectrum.frequency(dominant))
            << " power=" << fmt(spectrum.power[dominant - 1])
            << " fraction=" << fmt(fraction) << "\n";
  std::cout << "wrote " << args.out << "\n";
  std::cout << "wrote " << report_path << "\n";
  return 0;
}

int run_synth(const SynthArgs& args) {
  std::cout << "config: rftkit synth --kind " << args.kind << " --n0 " << args.n0
            << " --delta " << fmt(args.delta) << " --n1 " << args.n1 << " --t "
            << args.t << " --seed " << args.seed << " --mode " << args.mode
            << " --out " << args.out << "\n";
  rftkit::TimeSeries series;
  if (args.kind == "cosine") {
    series = rftkit::gen_cosine({args.n0, args.delta, 1.0, args.t});
  } else if (args.kind == "modcos") {
    const rftkit::ModulationMode mode =
        args.mode == "inst" ? rftkit::ModulationMode::instantaneous
                            : rftkit::ModulationMode::phase_accumulated;
    series = rftkit::gen_modulated_cosine({args.n0, args.n1, args.t, mode});
  } else if (args.kind == "brownian") {
    series = rftkit::gen_brownian(args.t, args.seed);
  } else {
    series = rftkit::gen_white_noise(args.t, args.seed);
  }
  rftkit::write_series(series, args.out);
  std::cout << "label: " << series.label << "\n";
  std::cout << "wrote " << args.out << " (t=" << series.length() << ")\n";
  return 0;
}

int run_wk_check(const WkArgs& args) {
  rftkit::LoadSpec load;
  load.path = args.in;
  const rftkit::TimeSeries series = rftkit::load_series(load);
  const std::size_t t = series.length();

  const std::int64_t q_max =
      args.q_max > 0 ? args.q_max
                     : std::min<std::int64_t>(static_cast<std::int64_t>(t), 1000);
  const std::int64_t h_max =
      args.h_max >= 0 ? args.h_max
                      : std::min<std::int64_t>(30, static_cast<std::int64_t>(t) - 1);
  std::cout << "config: rftkit wk-check --in " << args.in << " --qmax " << q_max
            << " --hmax " << h_max << " --out " << args.out << "\n";
  check_q_max(q_max);
  if (h_max >= static_cast<std::int64_t>(t)) {
    throw std::out_of_range("h_max = " + std::to_string(h_max) +
                            " must be < t = " + std::to_string(t));
  }

  const rftkit::ArithCache cache(q_max);
  const rftkit::RftSpectrum spectrum =
      rftkit::rft_forward(series, static_cast<std::size_t>(q_max), cache);
  const auto rows = rftkit::wk_check(series, spectrum,
                                     static_cast<std::size_t>(h_max), cache);

  std::ofstream out(args.out);
  if (!out) {
    throw std::runtime_error("cannot write " + args.out);
  }
  out << "h\tlhs\trhs\tresidual\n";
  for (const auto& row : rows) {
    out << row.h << '\t' << fmt(row.lhs) << '\t' << fmt(row.rhs) << '\t'
        << fmt(row.residual) << '\n';
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("I/O failure writing " + args.out);
  }

  double worst = 0.0;
  std::size_t worst_h = 0;
  for (const auto& row : rows) {
    if (std::fabs(row.residual) > worst) {
      worst = std::fabs(row.residual);
      worst_h = row.h;
    }
  }
  std::cout << "t=" << t << " q_max=" << q_max << " h_max=" << h_max << "\n";
  std::cout << "max |residual| = " << fmt(worst) << " at h=" << worst_h << "\n";
  std::cout << "wrote " << args.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rftkit: Ramanujan-Fourier and classical spectral analysis of "
               "time series"};
  app.require_subcommand(1);

  RsTableArgs rs_args;
  auto* rs = app.add_subcommand("rs-table", "Write a table of Ramanujan sums c_q(n)");
  rs->add_option("--qmax", rs_args.q_max, "Number of rows (scales q = 1..Q)")->required();
  rs->add_option("--nmax", rs_args.n_max, "Number of columns (n = 1..N)")->required();
  rs->add_option("--out", rs_args.out, "Output path")->required();

  RftArgs rft_args;
  auto* rft = app.add_subcommand("rft", "Ramanujan-Fourier spectrum of a series");
  rft->add_option("--in", rft_args.in, "Input delimited text file")->required();
  rft->add_option("--col", rft_args.column, "Zero-based value column", true);
  rft->add_option("--skip", rft_args.skip, "Header lines to skip", true);
  rft->add_option("--qmax", rft_args.q_max, "Largest scale (default min(t, 1000))");
  rft->add_option("--detrend", rft_args.detrend, "Detrend mode", true)
      ->check(CLI::IsMember({"none", "mean", "linear"}));
  rft->add_option("--shifts", rft_args.shifts, "Shifted sub-series to average", true);
  rft->add_option("--reducer", rft_args.reducer, "Shift-averaging statistic", true)
      ->check(CLI::IsMember({"rms", "meanabs"}));
  rft->add_option("--out", rft_args.out, "Output path (.json for JSON, else TSV)")
      ->required();

  FftArgs fft_args;
  auto* fft = app.add_subcommand("fft", "DFT periodogram and 1/f^alpha slope fit");
  fft->add_option("--in", fft_args.in, "Input delimited text file")->required();
  fft->add_option("--window", fft_args.window, "Window function", true)
      ->check(CLI::IsMember({"none", "hann"}));
  fft->add_option("--band", fft_args.band, "Fit band FLO:FHI in cycles/sample")
      ->required();
  fft->add_option("--out", fft_args.out, "Output path (.json for JSON, else TSV)")
      ->required();

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic series");
  synth->add_option("--kind", synth_args.kind, "Signal family")
      ->required()
      ->check(CLI::IsMember({"cosine", "modcos", "brownian", "white"}));
  synth->add_option("--n0", synth_args.n0, "Carrier period in samples", true);
  synth->add_option("--delta", synth_args.delta, "Phase delay in radians", true);
  synth->add_option("--n1", synth_args.n1, "Modulation period in samples", true);
  synth->add_option("--t", synth_args.t, "Sample count", true);
  synth->add_option("--seed", synth_args.seed, "Generator seed", true);
  synth->add_option("--mode", synth_args.mode, "Modulated-cosine mode", true)
      ->check(CLI::IsMember({"inst", "phase"}));
  synth->add_option("--out", synth_args.out, "Output series path")->required();

  WkArgs wk_args;
  auto* wk = app.add_subcommand("wk-check", "Wiener-Khintchine residual table");
  wk->add_option("--in", wk_args.in, "Input delimited text file")->required();
  wk->add_option("--qmax", wk_args.q_max, "Largest scale (default min(t, 1000))");
  wk->add_option("--hmax", wk_args.h_max, "Largest lag (default min(30, t-1))");
  wk->add_option("--out", wk_args.out, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (rs->parsed()) return run_rs_table(rs_args);
    if (rft->parsed()) return run_rft(rft_args);
    if (fft->parsed()) return run_fft(fft_args);
    if (synth->parsed()) return run_synth(synth_args);
    if (wk->parsed()) return run_wk_check(wk_args);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
