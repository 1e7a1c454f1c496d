/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

#include "markovds/telemetry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <stdexcept>

#include "markovds/csv.hpp"

namespace markovds {

namespace {

double max_abs_sample(const std::vector<double>& samples) {
  double m = 0.0;
  for (double s : samples) m = std::max(m, std::abs(s));
  return m;
}

}  // namespace

Telemetry::Telemetry(std::vector<Channel> channels, double dt)
    : channels_(std::move(channels)), dt_(dt) {
  if (channels_.empty()) throw std::invalid_argument("telemetry needs at least one channel");
  if (!(dt_ > 0.0)) throw std::invalid_argument("telemetry dt must be positive");

  const std::size_t n = channels_[0].samples.size();
  if (n < 2) throw std::invalid_argument("telemetry needs at least 2 samples per channel");

  std::set<std::string_view> names;
  for (auto& ch : channels_) {
    if (!names.insert(ch.name).second)
      throw std::invalid_argument("duplicate channel name '" + ch.name + "'");
    if (ch.samples.size() != n)
      throw std::invalid_argument("channel '" + ch.name + "' has " +
                                  std::to_string(ch.samples.size()) + " samples, expected " +
                                  std::to_string(n));
    if (!(ch.error > 0.0))
      throw std::invalid_argument("channel '" + ch.name + "' needs a positive measurement error");
    const double data_max = max_abs_sample(ch.samples);
    if (ch.max_abs < 0.0)
      ch.max_abs = data_max;
    else if (ch.max_abs < data_max)
      throw std::invalid_argument("channel '" + ch.name + "' max_abs below its largest sample");
  }
}

std::size_t Telemetry::length() const noexcept { return channels_[0].samples.size(); }

const Channel* Telemetry::find_channel(std::string_view name) const noexcept {
  for (const auto& ch : channels_)
    if (ch.name == name) return &ch;
  return nullptr;
}

const Channel& Telemetry::channel(std::string_view name) const {
  const Channel* ch = find_channel(name);
  if (!ch) throw std::invalid_argument("unknown channel " + std::string(name));
  return *ch;
}

Telemetry load_csv(const std::filesystem::path& path, double dt,
                   const std::map<std::string, double>& errors) {
  CsvTable table = read_numeric_csv(path);

  for (const auto& [name, err] : errors) {
    if (std::find(table.header.begin(), table.header.end(), name) == table.header.end())
      throw std::invalid_argument("unknown channel " + name);
    (void)err;
  }

  std::vector<Channel> channels;
  channels.reserve(table.header.size());
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    auto it = errors.find(table.header[c]);
    if (it == errors.end())
      throw std::invalid_argument("no measurement error given for channel " + table.header[c]);
    Channel ch;
    ch.name = table.header[c];
    ch.error = it->second;
    ch.samples.reserve(table.rows.size());
    for (const auto& row : table.rows) ch.samples.push_back(row[c]);
    channels.push_back(std::move(ch));
  }
  return Telemetry(std::move(channels), dt);
}

void save_csv(const Telemetry& telemetry, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");

  std::vector<std::string> cells;
  for (const auto& ch : telemetry.channels()) cells.push_back(ch.name);
  out << join_csv_row(cells) << '\n';

  for (std::size_t i = 0; i < telemetry.length(); ++i) {
    cells.clear();
    for (const auto& ch : telemetry.channels()) cells.push_back(format_double(ch.samples[i]));
    out << join_csv_row(cells) << '\n';
  }
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

Telemetry synth_oscillator(const OscillatorSpec& spec) {
  if (spec.n_samples < 2) throw std::invalid_argument("n_samples < 2");
  if (!(spec.dt > 0.0)) throw std::invalid_argument("oscillator dt must be positive");
  if (!(spec.angular_frequency > 0.0))
    throw std::invalid_argument("angular_frequency must be positive");
  if (spec.damping_ratio < 0.0 || spec.damping_ratio >= 1.0)
    throw std::invalid_argument("damping_ratio must lie in [0, 1)");
  if (spec.noise_sd < 0.0) throw std::invalid_argument("noise_sd must be nonnegative");
  if (spec.amplitude == 0.0) throw std::invalid_argument("amplitude must be nonzero");

  const double a = spec.amplitude;
  const double w = spec.angular_frequency;
  const double xi = spec.damping_ratio;

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> noise(0.0, spec.noise_sd);

  Channel x{"x", {}, std::abs(a) / 100.0, -1.0};
  Channel v{"v", {}, std::abs(a) / 100.0, -1.0};
  x.samples.reserve(spec.n_samples);
  v.samples.reserve(spec.n_samples);
  for (std::size_t i = 0; i < spec.n_samples; ++i) {
    const double t = static_cast<double>(i) * spec.dt;
    const double envelope = a * std::exp(-xi * w * t);
    const double arg = w * t + spec.phase;
    double xt = envelope * std::sin(arg);
    double vt = envelope * w * (std::cos(arg) - xi * std::sin(arg));
    if (spec.noise_sd > 0.0) {
      xt += noise(rng);
      vt += noise(rng);
    }
    x.samples.push_back(xt);
    v.samples.push_back(vt);
  }
  return Telemetry({std::move(x), std::move(v)}, spec.dt);
}

Telemetry add_lag_channels(const Telemetry& telemetry, const std::vector<LagSpec>& lags) {
  const std::size_t n = telemetry.length();
  std::size_t max_lag = 0;
  for (const auto& lag : lags) {
    if (lag.lag_steps == 0) throw std::invalid_argument("lag_steps must be positive");
    if (lag.lag_steps >= n)
      throw std::invalid_argument("lag_steps " + std::to_string(lag.lag_steps) +
                                  " is not below the telemetry length " + std::to_string(n));
    if (!telemetry.find_channel(lag.source_channel))
      throw std::invalid_argument("unknown source channel " + lag.source_channel);
    max_lag = std::max(max_lag, lag.lag_steps);
  }
  if (max_lag + 2 > n)
    throw std::invalid_argument("lags leave fewer than 2 aligned samples");

  const std::size_t out_len = n - max_lag;
  std::vector<Channel> channels;
  channels.reserve(telemetry.channel_count() + lags.size());

  // Align everything at the latest common instant: output step j corresponds
  // to input step j + max_lag.
  for (const auto& ch : telemetry.channels()) {
    Channel copy{ch.name, {}, ch.error, ch.max_abs};
    copy.samples.assign(ch.samples.begin() + static_cast<std::ptrdiff_t>(max_lag),
                        ch.samples.end());
    channels.push_back(std::move(copy));
  }
  for (const auto& lag : lags) {
    const Channel& src = telemetry.channel(lag.source_channel);
    Channel lagged{src.name + "_lag" + std::to_string(lag.lag_steps), {}, src.error, src.max_abs};
    const std::size_t offset = max_lag - lag.lag_steps;
    lagged.samples.assign(src.samples.begin() + static_cast<std::ptrdiff_t>(offset),
                          src.samples.begin() + static_cast<std::ptrdiff_t>(offset + out_len));
    channels.push_back(std::move(lagged));
  }
  return Telemetry(std::move(channels), telemetry.dt());
}

}  // namespace markovds
