/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

// Description: Multichannel telemetry, CSV ingestion, lagged channels, and
// the synthetic damped-oscillator generator.

#ifndef MARKOVDS_TELEMETRY_HPP
#define MARKOVDS_TELEMETRY_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace markovds {

/** One uniformly sampled signal with its instrument metrology.
 *
 *  `error` is the measurement error X_delta of the channel (the resolution
 *  below which two readings are indistinguishable) and `max_abs` is the
 *  instrument range X_max. A negative `max_abs` means "derive from the
 *  samples" when the channel enters a Telemetry. */
struct Channel {
  std::string name;
  std::vector<double> samples;
  double error = 1.0;
  double max_abs = -1.0;
};

/** Uniformly sampled multichannel signal. Immutable after construction:
 *  all mutators return new values, so telemetry can be shared freely
 *  across threads. */
class Telemetry {
public:
  /** Validates: >= 2 samples, equal length across channels, dt > 0,
   *  error > 0 and max_abs >= max |sample| per channel. */
  Telemetry(std::vector<Channel> channels, double dt);

  double dt() const noexcept { return dt_; }
  std::size_t length() const noexcept;
  std::size_t channel_count() const noexcept { return channels_.size(); }
  const std::vector<Channel>& channels() const noexcept { return channels_; }
  const Channel& channel(std::size_t index) const { return channels_.at(index); }

  /** nullptr when no channel has that name. */
  const Channel* find_channel(std::string_view name) const noexcept;
  /** Throws std::invalid_argument when no channel has that name. */
  const Channel& channel(std::string_view name) const;

private:
  std::vector<Channel> channels_;
  double dt_;
};

/** Damped linear oscillator x(t) = A exp(-xi w t) sin(w t + phi).
 *  damping_ratio >= 0 gives a decaying envelope; the generated telemetry
 *  carries the displacement and its analytic velocity so a 2-D phase
 *  portrait needs no numerical differentiation. */
struct OscillatorSpec {
  double amplitude = 1.0;
  double damping_ratio = 0.0;       // xi in [0, 1)
  double angular_frequency = 6.283185307179586;  // rad/s
  double phase = 0.0;               // rad
  double dt = 0.01;                 // s
  std::size_t n_samples = 0;
  double noise_sd = 0.0;            // additive Gaussian, both channels
  std::uint64_t seed = 42;
};

/** Lagged copy of a channel: value at output step t is the source value
 *  lag_steps samples earlier. */
struct LagSpec {
  std::string source_channel;
  std::size_t lag_steps = 1;
};

/** Read telemetry from a headered CSV (no time column; time is implicit via
 *  dt). `errors` must provide the measurement error X_delta for every channel
 *  named in the header; max_abs is computed from the data. */
Telemetry load_csv(const std::filesystem::path& path, double dt,
                   const std::map<std::string, double>& errors);

/** Write channels as a headered CSV; values are printed with shortest
 *  round-trip precision, so load_csv(save_csv(t)) reproduces the samples
 *  exactly. */
void save_csv(const Telemetry& telemetry, const std::filesystem::path& path);

/** Channels "x" (displacement) and "v" (analytic first derivative);
 *  channel errors default to |A|/100. */
Telemetry synth_oscillator(const OscillatorSpec& spec);

/** Append lagged channels named "<source>_lag<k>" and truncate all channels
 *  to the latest common instant; output length = input length - max lag.
 *  Lagged channels inherit error and max_abs from their source. */
Telemetry add_lag_channels(const Telemetry& telemetry, const std::vector<LagSpec>& lags);

}  // namespace markovds

#endif  // MARKOVDS_TELEMETRY_HPP
