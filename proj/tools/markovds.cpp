/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

// Description: Command-line pipeline: synthesize or ingest telemetry, fit a
// Markov model in the delay space, analyze it modally, and forecast. Human
// summaries go to stdout, data goes to files, errors to stderr.
// Exit codes: 0 success, 1 error, 2 success with warnings.

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "markovds/csv.hpp"
#include "markovds/embedding.hpp"
#include "markovds/markov.hpp"
#include "markovds/modal.hpp"
#include "markovds/model_io.hpp"
#include "markovds/states.hpp"
#include "markovds/telemetry.hpp"

namespace {

using namespace markovds;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitWarning = 2;

/** An error tagged with the pipeline stage it came from. */
class StageError : public std::runtime_error {
public:
  StageError(std::string stage_name, const std::string& what)
      : std::runtime_error(what), stage_(std::move(stage_name)) {}
  const std::string& stage() const noexcept { return stage_; }

private:
  std::string stage_;
};

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

std::string num(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

// ---------------------------------------------------------------------------
// Option parsing helpers

std::map<std::string, double> parse_error_specs(const std::vector<std::string>& specs) {
  std::map<std::string, double> errors;
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("expected --error NAME=VALUE, got '" + spec + "'");
    const std::string name = spec.substr(0, eq);
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(spec.substr(eq + 1), &used);
      if (used != spec.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid error value in '" + spec + "'");
    }
    if (!(value > 0.0)) throw std::invalid_argument("measurement error must be positive: " + spec);
    if (!errors.emplace(name, value).second)
      throw std::invalid_argument("duplicate --error for channel " + name);
  }
  return errors;
}

std::vector<LagSpec> parse_lag_specs(const std::vector<std::string>& specs) {
  std::vector<LagSpec> lags;
  for (const auto& spec : specs) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos || colon == 0)
      throw std::invalid_argument("expected --lag CHANNEL:STEPS, got '" + spec + "'");
    LagSpec lag;
    lag.source_channel = spec.substr(0, colon);
    try {
      const long steps = std::stol(spec.substr(colon + 1));
      if (steps <= 0) throw std::invalid_argument("non-positive");
      lag.lag_steps = static_cast<std::size_t>(steps);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid lag steps in '" + spec + "'");
    }
    lags.push_back(std::move(lag));
  }
  return lags;
}

struct IngestOptions {
  std::string input;
  double dt = 0.0;
  std::vector<std::string> error_specs;
  std::vector<std::string> lag_specs;
  std::vector<std::string> axes;
  double r0 = 1.0;
  double k = kDefaultNeighborFactor;
  double cell_size = 1.0;
  double adequacy_threshold = kDefaultAdequacyThreshold;
};

void add_ingest_options(CLI::App* cmd, IngestOptions& opt, bool with_selection) {
  cmd->add_option("--input", opt.input, "Telemetry CSV (header row of channel names)")
      ->required();
  cmd->add_option("--dt", opt.dt, "Sampling interval in seconds")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--error", opt.error_specs,
                  "Measurement error per channel, NAME=VALUE (repeatable)")
      ->required();
  cmd->add_option("--lag", opt.lag_specs, "Lagged copy of a channel, CHANNEL:STEPS (repeatable)");
  cmd->add_option("--axes", opt.axes,
                  "Delay-space axes in order (default: all channels, lags included)")
      ->delimiter(',');
  if (with_selection) {
    cmd->add_option("--r0", opt.r0, "Squared-distance exclusion radius R0")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--k", opt.k, "Neighbor threshold factor on R0")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cell-size", opt.cell_size, "Hypercubic grid cell edge in error units")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--adequacy-threshold", opt.adequacy_threshold,
                    "Minimum share of points with more than 2 neighbors")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
  }
}

Telemetry ingest_telemetry(const IngestOptions& opt) {
  auto errors = parse_error_specs(opt.error_specs);
  Telemetry raw = stage("ingest", [&] { return load_csv(opt.input, opt.dt, errors); });
  auto lags = parse_lag_specs(opt.lag_specs);
  if (lags.empty()) return raw;
  return stage("lag", [&] { return add_lag_channels(raw, lags); });
}

EmbeddingSpec embedding_spec(const IngestOptions& opt, const Telemetry& telemetry) {
  EmbeddingSpec spec;
  spec.cell_size = opt.cell_size;
  if (!opt.axes.empty()) {
    spec.axes = opt.axes;
  } else {
    for (const auto& ch : telemetry.channels()) spec.axes.push_back(ch.name);
  }
  return spec;
}

// ---------------------------------------------------------------------------
// synth

struct SynthOptions {
  OscillatorSpec spec;
  std::string out;
};

int run_synth(const SynthOptions& opt) {
  Telemetry t = stage("synth", [&] { return synth_oscillator(opt.spec); });
  stage("write", [&] { save_csv(t, opt.out); });

  const double t_end = static_cast<double>(opt.spec.n_samples - 1) * opt.spec.dt;
  const double envelope_end =
      std::abs(opt.spec.amplitude) *
      std::exp(-opt.spec.damping_ratio * opt.spec.angular_frequency * t_end);
  std::cout << "wrote " << opt.out << ": " << t.length() << " samples, 2 channels (x, v), dt="
            << num(opt.spec.dt) << " s\n"
            << "envelope " << num(std::abs(opt.spec.amplitude)) << " -> " << num(envelope_end)
            << ", noise sd " << num(opt.spec.noise_sd) << ", seed " << opt.spec.seed << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// fit

struct FitOptions {
  IngestOptions ingest;
  std::string scheme = "crisp";
  double alpha = 0.0;  // 0 = default 0.01 * r0
  std::size_t stride = 1;
  std::uint64_t seed = 42;
  std::string out;
};

int run_fit(const FitOptions& opt) {
  Telemetry telemetry = ingest_telemetry(opt.ingest);
  EmbeddingSpec spec = embedding_spec(opt.ingest, telemetry);
  DelayPointSeries series = stage("embed", [&] { return embed(telemetry, spec); });
  CharacteristicPointSet states =
      stage("select", [&] { return select_points(series, opt.ingest.r0, opt.ingest.k); });

  const double alpha = opt.alpha > 0.0 ? opt.alpha : default_fuzzy_alpha(opt.ingest.r0);
  MarkovModel model = stage("fit", [&] {
    if (opt.scheme == "fuzzy") return fit_fuzzy(series, states, alpha, opt.stride);
    return fit_crisp(series, states, opt.stride);
  });

  std::optional<double> information;
  try {
    information = information_estimate(telemetry);
  } catch (const std::exception&) {
    // A constant channel has max_abs below its error; the estimate is then
    // undefined but the fit itself is still valid.
  }

  json meta;
  meta["source"] = opt.ingest.input;
  meta["seed"] = opt.seed;
  meta["cell_size"] = opt.ingest.cell_size;
  meta["stride"] = opt.stride;
  for (const auto& [name, err] : parse_error_specs(opt.ingest.error_specs))
    meta["channel_errors"][name] = err;
  for (const auto& lag : parse_lag_specs(opt.ingest.lag_specs))
    meta["lags"].push_back({{"channel", lag.source_channel}, {"steps", lag.lag_steps}});
  meta["adequacy_fraction"] = states.adequacy_fraction();
  if (information) meta["information_estimate"] = *information;

  stage("write", [&] { save_model(model, opt.out, meta); });

  const auto& counts = states.neighbor_counts();
  const auto [min_it, max_it] = std::minmax_element(counts.begin(), counts.end());
  const Adequacy adq = adequacy(counts, opt.ingest.adequacy_threshold);

  std::cout << "characteristic points: " << states.size() << "\n"
            << "dimension estimate: " << states.dimension_estimate() << " (robust max neighbors "
            << robust_max_neighbors(counts) << ", range [" << *min_it << ", " << *max_it << "])\n"
            << "adequacy: " << num(adq.fraction)
            << (adq.adequate ? " (adequate)" : " (under-trained)") << "\n"
            << "information estimate: " << (information ? num(*information) + " nats" : "undefined")
            << "\n";
  std::cout << "grid cells per axis (h=" << num(opt.ingest.cell_size) << "):";
  for (auto c : series.cells_per_axis(opt.ingest.cell_size)) std::cout << " " << c;
  std::cout << "\ntransitions: " << model.transition_count() << ", scheme: " << opt.scheme
            << (opt.scheme == "fuzzy" ? " (alpha " + num(alpha) + ")" : "") << ", dt "
            << num(model.dt()) << " s\n"
            << "model written: " << opt.out << "\n";

  if (!adq.adequate) {
    std::cerr << "warning: adequacy " << num(adq.fraction) << " below "
              << num(opt.ingest.adequacy_threshold)
              << ": the Markov model is under-trained for r0=" << num(opt.ingest.r0) << "\n";
    return kExitWarning;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// modal

struct ModalOptions {
  std::string model_path;
  std::string out_dir = ".";
  std::size_t top = 5;
};

int run_modal(const ModalOptions& opt) {
  ModelFile file = stage("load", [&] { return load_model(opt.model_path); });
  const MarkovModel& model = file.model;
  ModalResult result = stage("modal", [&] { return decompose(model); });

  const std::filesystem::path dir(opt.out_dir);
  stage("write", [&] {
    std::filesystem::create_directories(dir);

    std::ofstream eig(dir / "eigenvalues.csv");
    if (!eig) throw std::runtime_error("cannot write eigenvalues.csv");
    eig << "mode,re,im,modulus,arg,steps_per_cycle,frequency_hz,period_s,damping\n";
    for (std::size_t m = 0; m < result.size(); ++m) {
      const auto lambda = result.eigenvalues()[m];
      eig << m << ',' << format_double(lambda.real()) << ',' << format_double(lambda.imag()) << ','
          << format_double(std::abs(lambda)) << ',' << format_double(std::arg(lambda)) << ',';
      if (result.period(m)) {
        eig << format_double(*result.period(m) / result.dt()) << ','
            << format_double(*result.frequency(m)) << ',' << format_double(*result.period(m))
            << ',' << format_double(*result.damping(m));
      } else {
        eig << ",,,";
      }
      eig << '\n';
    }

    std::ofstream forms(dir / "eigenforms.csv");
    if (!forms) throw std::runtime_error("cannot write eigenforms.csv");
    EigenformTable table = eigenform_table(result, model.states());
    for (std::size_t a = 0; a < model.axis_names().size(); ++a)
      forms << (a ? "," : "") << model.axis_names()[a];
    for (int m : table.mode_indices) forms << ",mode" << m << "_abs,mode" << m << "_phase";
    forms << '\n';
    for (Eigen::Index i = 0; i < table.coordinates.rows(); ++i) {
      for (Eigen::Index a = 0; a < table.coordinates.cols(); ++a)
        forms << (a ? "," : "") << format_double(table.coordinates(i, a));
      for (Eigen::Index c = 0; c < table.amplitudes.cols(); ++c)
        forms << ',' << format_double(std::abs(table.amplitudes(i, c))) << ','
              << format_double(std::arg(table.amplitudes(i, c)));
      forms << '\n';
    }
  });

  std::cout << "states: " << result.size() << ", attractors: " << result.attractor_count()
            << ", real eigenvalues: " << real_eigenvalue_count(result)
            << ", eigenbasis condition: " << num(result.eigenbasis_condition()) << "\n";
  std::cout << "top oscillatory modes (largest |lambda| first):\n";
  std::size_t shown = 0;
  for (std::size_t m = 0; m < result.size() && shown < opt.top; ++m) {
    if (!result.period(m)) continue;
    if (result.eigenvalues()[m].imag() < 0.0) continue;  // one line per conjugate pair
    std::cout << "  mode " << m << ": |lambda| " << num(std::abs(result.eigenvalues()[m]))
              << ", period " << num(*result.period(m)) << " s, damping " << num(*result.damping(m))
              << "\n";
    ++shown;
  }
  if (shown == 0) std::cout << "  (none)\n";
  std::cout << "wrote " << (dir / "eigenvalues.csv").string() << ", "
            << (dir / "eigenforms.csv").string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// forecast

struct ForecastOptions {
  std::string model_path;
  long p0_index = -1;
  std::string from_sample;
  std::size_t sample_index = 0;
  std::size_t steps = 0;
  long sparsify = -1;  // -1 = default N+1, 0 = keep all
  std::string out_dir = ".";
};

int run_forecast(const ForecastOptions& opt) {
  ModelFile file = stage("load", [&] { return load_model(opt.model_path); });
  const MarkovModel& model = file.model;
  const std::size_t s = model.size();

  if ((opt.p0_index >= 0) == !opt.from_sample.empty())
    throw StageError("forecast", "exactly one of --p0 and --from-sample is required");

  std::optional<DelayPointSeries> held_out;
  std::size_t start_state = 0;
  if (!opt.from_sample.empty()) {
    held_out = stage("ingest", [&] {
      if (!file.meta.is_object() || !file.meta.contains("channel_errors"))
        throw std::runtime_error(
            "model has no channel_errors metadata; cannot embed the held-out file");
      std::map<std::string, double> errors;
      for (const auto& [name, err] : file.meta["channel_errors"].items())
        errors[name] = err.get<double>();
      Telemetry t = load_csv(opt.from_sample, model.dt(), errors);
      if (file.meta.contains("lags")) {
        std::vector<LagSpec> lags;
        for (const auto& lag : file.meta["lags"])
          lags.push_back({lag["channel"].get<std::string>(), lag["steps"].get<std::size_t>()});
        if (!lags.empty()) t = add_lag_channels(t, lags);
      }
      return embed(t, {model.axis_names(), 1.0});
    });
    if (opt.sample_index >= held_out->size())
      throw StageError("forecast", "--sample-index is past the end of the held-out file");
    start_state = assign_state(held_out->point(opt.sample_index), model.states());
  } else {
    if (static_cast<std::size_t>(opt.p0_index) >= s)
      throw StageError("forecast", "--p0 state index " + std::to_string(opt.p0_index) +
                                       " out of range [0, " + std::to_string(s) + ")");
    start_state = static_cast<std::size_t>(opt.p0_index);
  }

  std::optional<std::size_t> sparsify;  // library default: dimension + 1
  if (opt.sparsify == 0)
    sparsify = s;  // keep every component
  else if (opt.sparsify > 0)
    sparsify = static_cast<std::size_t>(opt.sparsify);

  StateDistribution p0 = StateDistribution::delta(s, start_state);
  auto path = stage("forecast", [&] { return forecast(model, p0, opt.steps, sparsify); });
  const std::size_t kept = sparsify.value_or(default_sparsify(model));

  const std::filesystem::path dir(opt.out_dir);
  double max_distance = 0.0;
  std::size_t compared = 0;
  stage("write", [&] {
    std::filesystem::create_directories(dir);

    std::ofstream out(dir / "forecast.csv");
    if (!out) throw std::runtime_error("cannot write forecast.csv");
    out << "step";
    for (std::size_t i = 0; i < s; ++i) out << ",state_" << i;
    out << '\n';
    for (std::size_t t = 0; t < path.size(); ++t) {
      out << (t + 1);
      for (std::size_t i = 0; i < s; ++i) out << ',' << format_double(path[t][i]);
      out << '\n';
    }

    if (held_out) {
      std::ofstream cmp(dir / "comparison.csv");
      if (!cmp) throw std::runtime_error("cannot write comparison.csv");
      cmp << "step";
      for (const auto& a : model.axis_names()) cmp << ",expected_" << a;
      for (const auto& a : model.axis_names()) cmp << ",actual_" << a;
      cmp << ",distance\n";
      for (std::size_t t = 0; t < path.size(); ++t) {
        const std::size_t actual_index = opt.sample_index + t + 1;
        if (actual_index >= held_out->size()) break;
        const Eigen::VectorXd expected = expected_coordinates(model.states(), path[t]);
        const Eigen::VectorXd actual = held_out->point(actual_index);
        cmp << (t + 1);
        for (Eigen::Index a = 0; a < expected.size(); ++a) cmp << ',' << format_double(expected[a]);
        for (Eigen::Index a = 0; a < actual.size(); ++a) cmp << ',' << format_double(actual[a]);
        const double distance = (expected - actual).norm();
        cmp << ',' << format_double(distance) << '\n';
        max_distance = std::max(max_distance, distance);
        ++compared;
      }
    }
  });

  std::cout << "forecast: " << path.size() << " steps from state " << start_state << ", ";
  if (kept < s)
    std::cout << "keeping the top " << kept << " components per step\n";
  else
    std::cout << "no sparsification\n";
  std::cout << "wrote " << (dir / "forecast.csv").string() << "\n";
  if (held_out) {
    std::cout << "wrote " << (dir / "comparison.csv").string() << " (" << compared
              << " compared steps, max distance " << num(max_distance) << ")\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// dimension / info

int run_dimension(const IngestOptions& opt) {
  Telemetry telemetry = ingest_telemetry(opt);
  EmbeddingSpec spec = embedding_spec(opt, telemetry);
  DelayPointSeries series = stage("embed", [&] { return embed(telemetry, spec); });
  CharacteristicPointSet states =
      stage("select", [&] { return select_points(series, opt.r0, opt.k); });

  const auto& counts = states.neighbor_counts();
  const auto [min_it, max_it] = std::minmax_element(counts.begin(), counts.end());
  const Adequacy adq = adequacy(counts, opt.adequacy_threshold);
  std::cout << "samples: " << series.size() << ", axes: " << series.dimension() << "\n"
            << "characteristic points: " << states.size() << "\n"
            << "neighbor counts: range [" << *min_it << ", " << *max_it << "], robust max "
            << robust_max_neighbors(counts) << "\n"
            << "dimension estimate: " << states.dimension_estimate() << "\n"
            << "adequacy: " << num(adq.fraction)
            << (adq.adequate ? " (adequate)" : " (under-trained)") << "\n";
  return adq.adequate ? kExitOk : kExitWarning;
}

struct InfoOptions {
  std::string input;
  double dt = 1.0;
  std::vector<std::string> error_specs;
};

int run_info(const InfoOptions& opt) {
  auto errors = parse_error_specs(opt.error_specs);
  Telemetry t = stage("ingest", [&] { return load_csv(opt.input, opt.dt, errors); });
  const double info = stage("info", [&] { return information_estimate(t); });
  std::cout << "channels: " << t.channel_count() << ", samples: " << t.length() << "\n"
            << "information estimate: " << num(info) << " nats\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov-chain models of dynamical systems from telemetry in a delay space"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file with one [section] per subcommand");

  SynthOptions synth_opt;
  auto* synth = app.add_subcommand("synth", "Generate damped-oscillator telemetry CSV");
  synth->add_option("--A", synth_opt.spec.amplitude, "Amplitude")->capture_default_str();
  synth->add_option("--xi", synth_opt.spec.damping_ratio, "Damping ratio in [0,1)")
      ->capture_default_str();
  synth->add_option("--omega", synth_opt.spec.angular_frequency, "Angular frequency, rad/s")
      ->capture_default_str();
  synth->add_option("--phi", synth_opt.spec.phase, "Phase, rad")->capture_default_str();
  synth->add_option("--dt", synth_opt.spec.dt, "Sampling interval, s")->capture_default_str();
  synth->add_option("--n", synth_opt.spec.n_samples, "Number of samples")->required();
  synth->add_option("--noise", synth_opt.spec.noise_sd, "Additive Gaussian noise sd")
      ->capture_default_str();
  synth->add_option("--seed", synth_opt.spec.seed, "RNG seed")->capture_default_str();
  synth->add_option("--out", synth_opt.out, "Output CSV path")->required();

  FitOptions fit_opt;
  auto* fit = app.add_subcommand("fit", "Fit a Markov model from telemetry");
  add_ingest_options(fit, fit_opt.ingest, /*with_selection=*/true);
  fit->add_option("--scheme", fit_opt.scheme, "Estimation scheme: crisp or fuzzy")
      ->capture_default_str()
      ->check(CLI::IsMember({"crisp", "fuzzy"}));
  fit->add_option("--alpha", fit_opt.alpha, "Fuzzy kernel width (default 0.01*r0)");
  fit->add_option("--stride", fit_opt.stride, "Transition period in samples")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  fit->add_option("--seed", fit_opt.seed, "Seed recorded in the model metadata")
      ->capture_default_str();
  fit->add_option("--out", fit_opt.out, "Output model JSON path")->required();

  ModalOptions modal_opt;
  auto* modal = app.add_subcommand("modal", "Eigen-analysis of a fitted model");
  modal->add_option("--model", modal_opt.model_path, "Model JSON path")->required();
  modal->add_option("--out-dir", modal_opt.out_dir, "Directory for the CSV outputs")
      ->capture_default_str();
  modal->add_option("--top", modal_opt.top, "Oscillatory modes to list in the summary")
      ->capture_default_str();

  ForecastOptions fc_opt;
  auto* fc = app.add_subcommand("forecast", "Propagate a state distribution forward");
  fc->add_option("--model", fc_opt.model_path, "Model JSON path")->required();
  fc->add_option("--p0", fc_opt.p0_index, "Initial state index (pure state)");
  fc->add_option("--from-sample", fc_opt.from_sample,
                 "Held-out telemetry CSV; starts from its embedded sample");
  fc->add_option("--sample-index", fc_opt.sample_index, "Sample in the held-out file to start at")
      ->capture_default_str();
  fc->add_option("--steps", fc_opt.steps, "Forecast horizon in steps")->required();
  fc->add_option("--sparsify", fc_opt.sparsify,
                 "Components kept per step (default: dimension+1; 0 keeps all)")
      ->check(CLI::NonNegativeNumber);
  fc->add_option("--out-dir", fc_opt.out_dir, "Directory for the CSV outputs")
      ->capture_default_str();

  IngestOptions dim_opt;
  auto* dim = app.add_subcommand("dimension", "Characteristic-point analysis only");
  add_ingest_options(dim, dim_opt, /*with_selection=*/true);

  InfoOptions info_opt;
  auto* info = app.add_subcommand("info", "Information estimate of a telemetry file");
  info->add_option("--input", info_opt.input, "Telemetry CSV")->required();
  info->add_option("--dt", info_opt.dt, "Sampling interval, s")->capture_default_str();
  info->add_option("--error", info_opt.error_specs, "Measurement error per channel, NAME=VALUE")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth) return run_synth(synth_opt);
    if (*fit) return run_fit(fit_opt);
    if (*modal) return run_modal(modal_opt);
    if (*fc) return run_forecast(fc_opt);
    if (*dim) return run_dimension(dim_opt);
    if (*info) return run_info(info_opt);
  } catch (const StageError& e) {
    std::cerr << "error [" << e.stage() << "]: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
