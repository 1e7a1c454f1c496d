/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

#include "markovds/modal.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace markovds {

namespace {

constexpr double kUnitEigenvalueSearch = 1e-6;
constexpr double kStationaryResidual = 1e-8;

struct Spectrum {
  Eigen::VectorXcd values;   // sorted
  Eigen::MatrixXcd vectors;  // unit 2-norm columns, same order
};

/** Eigen pairs sorted by descending modulus, then descending real part, then
 *  descending imaginary part; conjugate pairs end up adjacent with the
 *  positive-imaginary member first. */
Spectrum solve_spectrum(const Eigen::MatrixXd& matrix) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(matrix, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed to converge");

  const Eigen::VectorXcd& values = solver.eigenvalues();
  const Eigen::MatrixXcd& vectors = solver.eigenvectors();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&values](Eigen::Index a, Eigen::Index b) {
    const double ma = std::abs(values[a]);
    const double mb = std::abs(values[b]);
    if (ma != mb) return ma > mb;
    if (values[a].real() != values[b].real()) return values[a].real() > values[b].real();
    return values[a].imag() > values[b].imag();
  });

  Spectrum spectrum;
  spectrum.values.resize(values.size());
  spectrum.vectors.resize(vectors.rows(), vectors.cols());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    spectrum.values[i] = values[order[static_cast<std::size_t>(i)]];
    spectrum.vectors.col(i) = vectors.col(order[static_cast<std::size_t>(i)]);
  }
  return spectrum;
}

void check_residuals(const Eigen::MatrixXd& matrix, const Spectrum& spectrum) {
  for (Eigen::Index i = 0; i < spectrum.values.size(); ++i) {
    const Eigen::VectorXcd v = spectrum.vectors.col(i);
    const double residual = (matrix * v - spectrum.values[i] * v).cwiseAbs().maxCoeff();
    const double scale = v.cwiseAbs().maxCoeff();
    if (residual > kPerronTolerance * scale)
      throw std::runtime_error("eigenpair residual " + std::to_string(residual) +
                               " exceeds tolerance for eigenvalue " +
                               std::to_string(spectrum.values[i].real()) + "+" +
                               std::to_string(spectrum.values[i].imag()) + "i");
  }
}

void check_perron(const Spectrum& spectrum) {
  double max_modulus = 0.0;
  for (Eigen::Index i = 0; i < spectrum.values.size(); ++i)
    max_modulus = std::max(max_modulus, std::abs(spectrum.values[i]));
  if (max_modulus > 1.0 + kPerronTolerance)
    throw std::runtime_error("spectral radius " + std::to_string(max_modulus) +
                             " exceeds 1: matrix is not stochastic");

  const std::complex<double> top = spectrum.values[0];
  if (std::abs(top.imag()) > kPerronTolerance || top.real() <= 0.0 ||
      std::abs(top - 1.0) > kPerronTolerance)
    throw std::runtime_error("Perron violation: leading eigenvalue " +
                             std::to_string(top.real()) + "+" + std::to_string(top.imag()) +
                             "i is not 1");
}

/** Rotate a complex vector onto the real axis, flip so the sum is positive,
 *  and clamp roundoff negatives. Returns nothing when the vector has a
 *  genuinely negative component (not a stationary candidate). */
std::optional<Eigen::VectorXd> realify_nonnegative(const Eigen::VectorXcd& v) {
  Eigen::Index max_at = 0;
  v.cwiseAbs().maxCoeff(&max_at);
  const double scale = std::abs(v[max_at]);
  if (scale == 0.0) return std::nullopt;
  const std::complex<double> phase = v[max_at] / scale;
  Eigen::VectorXd w = (v / phase).real();
  if (w.sum() < 0.0) w = -w;
  const double clamp_tol = 1e-9 * scale;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w[i] < -clamp_tol) return std::nullopt;
    if (w[i] < 0.0) w[i] = 0.0;
  }
  const double sum = w.sum();
  if (!(sum > 0.0)) return std::nullopt;
  return Eigen::VectorXd(w / sum);
}

StateDistribution extract_stationary(const Eigen::MatrixXd& matrix, const Spectrum& spectrum) {
  bool found_candidate = false;
  for (Eigen::Index i = 0; i < spectrum.values.size(); ++i) {
    if (std::abs(spectrum.values[i] - 1.0) > kUnitEigenvalueSearch) continue;
    found_candidate = true;
    auto pi = realify_nonnegative(spectrum.vectors.col(i));
    if (!pi) continue;
    if ((matrix * *pi - *pi).cwiseAbs().maxCoeff() <= kStationaryResidual)
      return StateDistribution(std::move(*pi));
  }
  if (!found_candidate)
    throw std::runtime_error("no eigenvalue within 1e-6 of 1: transition matrix is corrupted");

  // Eigenvector extraction can mix degenerate unit modes; fall back to the
  // linear system (M - I) pi = 0 with the normalization row sum(pi) = 1.
  const Eigen::Index s = matrix.rows();
  Eigen::MatrixXd a = matrix - Eigen::MatrixXd::Identity(s, s);
  a.row(0).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(s);
  rhs[0] = 1.0;
  Eigen::VectorXd pi = a.fullPivLu().solve(rhs);
  for (Eigen::Index i = 0; i < s; ++i) pi[i] = std::max(pi[i], 0.0);
  const double sum = pi.sum();
  if (sum > 0.0 && (matrix * (pi / sum) - pi / sum).cwiseAbs().maxCoeff() <= kStationaryResidual)
    return StateDistribution(pi / sum);
  throw std::runtime_error("failed to extract a stationary distribution within tolerance");
}

double condition_estimate(const Eigen::MatrixXcd& vectors) {
  const Eigen::MatrixXcd inverse = Eigen::PartialPivLU<Eigen::MatrixXcd>(vectors).inverse();
  if (!inverse.allFinite()) return std::numeric_limits<double>::infinity();
  const double norm = vectors.cwiseAbs().colwise().sum().maxCoeff();
  const double inv_norm = inverse.cwiseAbs().colwise().sum().maxCoeff();
  return norm * inv_norm;
}

}  // namespace

ModalResult::ModalResult(std::vector<std::complex<double>> values, Eigen::MatrixXcd forms,
                         StateDistribution stationary, double dt)
    : eigenvalues_(std::move(values)),
      eigenforms_(std::move(forms)),
      stationary_(std::move(stationary)),
      dt_(dt) {}

ModalResult decompose(const MarkovModel& model) {
  const Eigen::MatrixXd& matrix = model.matrix();
  Spectrum spectrum = solve_spectrum(matrix);
  check_residuals(matrix, spectrum);
  check_perron(spectrum);

  StateDistribution pi = extract_stationary(matrix, spectrum);

  std::vector<std::complex<double>> values(spectrum.values.data(),
                                           spectrum.values.data() + spectrum.values.size());
  ModalResult result(std::move(values), std::move(spectrum.vectors), std::move(pi), model.dt());

  const std::size_t s = result.eigenvalues_.size();
  result.periods_.resize(s);
  result.frequencies_.resize(s);
  result.dampings_.resize(s);
  for (std::size_t m = 0; m < s; ++m) {
    const std::complex<double> lambda = result.eigenvalues_[m];
    if (std::abs(lambda) < kNumericalZeroModulus) continue;  // rank-deficiency zeros
    const auto timing = mode_frequency(lambda, model.dt());
    if (!timing) continue;
    result.periods_[m] = timing->period_s;
    result.frequencies_[m] = timing->frequency_hz;
    result.dampings_[m] = mode_damping(lambda, timing->frequency_hz, model.dt());
  }
  result.attractor_count_ = markovds::attractor_count(result);
  result.eigenbasis_condition_ = condition_estimate(result.eigenforms_);
  return result;
}

std::optional<ModeTiming> mode_frequency(std::complex<double> lambda, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const double phase = std::abs(std::arg(lambda));
  if (phase <= 1e-12) return std::nullopt;  // real nonnegative: no oscillation
  ModeTiming timing;
  timing.steps_per_cycle = 2.0 * std::numbers::pi / phase;
  timing.period_s = timing.steps_per_cycle * dt;
  timing.frequency_hz = 1.0 / timing.period_s;
  return timing;
}

double mode_damping(std::complex<double> lambda, double frequency_hz, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(frequency_hz > 0.0))
    throw std::invalid_argument("damping is defined for oscillatory modes only");
  const double modulus = std::abs(lambda);
  if (modulus <= 0.0) throw std::invalid_argument("damping undefined for zero eigenvalue");
  return std::log(modulus) / (2.0 * std::numbers::pi * frequency_hz * dt);
}

int attractor_count(const ModalResult& result, double tol) {
  int count = 0;
  for (const auto& lambda : result.eigenvalues())
    if (std::abs(lambda - 1.0) <= tol) ++count;
  return count;
}

int real_eigenvalue_count(const ModalResult& result, double tol) {
  int count = 0;
  for (const auto& lambda : result.eigenvalues())
    if (std::abs(lambda.imag()) <= tol) ++count;
  return count;
}

EigenformTable eigenform_table(const ModalResult& result, const CharacteristicPointSet& states,
                               std::optional<std::vector<int>> modes) {
  if (states.size() != result.size())
    throw std::invalid_argument("state count does not match modal result");

  EigenformTable table;
  if (modes) {
    table.mode_indices = std::move(*modes);
    for (int m : table.mode_indices)
      if (m < 0 || static_cast<std::size_t>(m) >= result.size())
        throw std::out_of_range("mode index out of range");
  } else {
    table.mode_indices.resize(result.size());
    std::iota(table.mode_indices.begin(), table.mode_indices.end(), 0);
  }

  table.coordinates = states.points();
  table.amplitudes.resize(static_cast<Eigen::Index>(states.size()),
                          static_cast<Eigen::Index>(table.mode_indices.size()));
  for (std::size_t c = 0; c < table.mode_indices.size(); ++c) {
    const auto m = static_cast<std::size_t>(table.mode_indices[c]);
    const Eigen::VectorXcd v = result.eigenform(m);
    if (std::abs(result.eigenvalues()[m] - 1.0) <= kPerronTolerance) {
      auto pi = realify_nonnegative(v);
      if (pi)
        table.amplitudes.col(static_cast<Eigen::Index>(c)) = pi->cast<std::complex<double>>();
      else  // degenerate unit mode with sign structure: fall back to max-modulus scale
        table.amplitudes.col(static_cast<Eigen::Index>(c)) = v / v.cwiseAbs().maxCoeff();
    } else {
      table.amplitudes.col(static_cast<Eigen::Index>(c)) = v / v.cwiseAbs().maxCoeff();
    }
  }
  return table;
}

StateDistribution stationary(const MarkovModel& model) {
  Spectrum spectrum = solve_spectrum(model.matrix());
  return extract_stationary(model.matrix(), spectrum);
}

}  // namespace markovds
