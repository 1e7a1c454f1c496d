/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

// Description: Modal analysis of the transition matrix. The spectrum of M
// splits the dynamics into a stationary part (eigenvalues at 1 = attractors)
// and damped oscillation modes; a complex eigenvalue advances its mode by
// arg(lambda) radians per step, so it oscillates with period
// 2*pi*dt/|arg(lambda)| and decays by |lambda| per step.

#ifndef MARKOVDS_MODAL_HPP
#define MARKOVDS_MODAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "markovds/markov.hpp"

namespace markovds {

inline constexpr double kAttractorTolerance = 1e-3;
inline constexpr double kRealAxisTolerance = 1e-9;
inline constexpr double kPerronTolerance = 1e-8;
inline constexpr double kNumericalZeroModulus = 1e-12;

/** Oscillation timing of one mode. */
struct ModeTiming {
  double frequency_hz = 0.0;
  double steps_per_cycle = 0.0;  // n_i = 2*pi / |arg(lambda)|
  double period_s = 0.0;         // n_i * dt
};

/** Full spectrum of a Markov model, sorted by descending modulus with
 *  complex-conjugate pairs adjacent (positive imaginary part first). */
class ModalResult {
public:
  std::size_t size() const noexcept { return eigenvalues_.size(); }
  const std::vector<std::complex<double>>& eigenvalues() const noexcept { return eigenvalues_; }
  /** Right eigenvectors, one column per mode, unit 2-norm. */
  const Eigen::MatrixXcd& eigenforms() const noexcept { return eigenforms_; }
  Eigen::VectorXcd eigenform(std::size_t mode) const {
    return eigenforms_.col(static_cast<Eigen::Index>(mode));
  }

  /** Empty for non-oscillatory modes and for numerically zero eigenvalues. */
  std::optional<double> period(std::size_t mode) const { return periods_.at(mode); }
  std::optional<double> frequency(std::size_t mode) const { return frequencies_.at(mode); }
  std::optional<double> damping(std::size_t mode) const { return dampings_.at(mode); }

  int attractor_count() const noexcept { return attractor_count_; }
  const StateDistribution& stationary() const noexcept { return stationary_; }
  double dt() const noexcept { return dt_; }

  /** 1-norm condition estimate of the eigenvector matrix; large values mean
   *  the spectral reconstruction M = Phi diag(lambda) Phi^-1 is unreliable. */
  double eigenbasis_condition() const noexcept { return eigenbasis_condition_; }

private:
  friend ModalResult decompose(const MarkovModel& model);
  ModalResult(std::vector<std::complex<double>> values, Eigen::MatrixXcd forms,
              StateDistribution stationary, double dt);

  std::vector<std::complex<double>> eigenvalues_;
  Eigen::MatrixXcd eigenforms_;
  std::vector<std::optional<double>> periods_;
  std::vector<std::optional<double>> frequencies_;
  std::vector<std::optional<double>> dampings_;
  int attractor_count_ = 0;
  StateDistribution stationary_;
  double dt_ = 0.0;
  double eigenbasis_condition_ = 0.0;
};

/** Full complex eigendecomposition of the transition matrix. Checks that
 *  every eigenpair satisfies ||M phi - lambda phi||_inf <= 1e-8 ||phi||_inf,
 *  that |lambda| <= 1 + 1e-8, and that the leading eigenvalue is real,
 *  positive and equal to 1 within 1e-8 (Perron property of a stochastic
 *  matrix). */
ModalResult decompose(const MarkovModel& model);

/** Oscillation timing of an eigenvalue, or nothing for a non-oscillatory
 *  (real nonnegative) one. A negative real eigenvalue alternates sign every
 *  step and reports the two-step Nyquist period. */
std::optional<ModeTiming> mode_frequency(std::complex<double> lambda, double dt);

/** Damping decrement xi = ln|lambda| / (2*pi*f*dt) = ln|lambda| / |arg lambda|.
 *  Zero for undamped modes on the unit circle, negative inside it. Throws for
 *  non-oscillatory modes (f <= 0). */
double mode_damping(std::complex<double> lambda, double frequency_hz, double dt);

/** Number of eigenvalues with |lambda - 1| <= tol: the invariant components
 *  (attractors) of the dynamics. */
int attractor_count(const ModalResult& result, double tol = kAttractorTolerance);

/** Number of real eigenvalues (|Im| <= tol): a lower bound for the degree of
 *  the differential equation generating the system. */
int real_eigenvalue_count(const ModalResult& result, double tol = kRealAxisTolerance);

/** Eigenform amplitudes over the characteristic points, one row per point.
 *  Modes with eigenvalue 1 are scaled to sum 1 (a stationary distribution);
 *  all other modes are scaled to unit maximum modulus. */
struct EigenformTable {
  std::vector<int> mode_indices;
  Eigen::MatrixXd coordinates;   // s x d characteristic-point coordinates
  Eigen::MatrixXcd amplitudes;   // s x |modes|
};

EigenformTable eigenform_table(const ModalResult& result, const CharacteristicPointSet& states,
                               std::optional<std::vector<int>> modes = std::nullopt);

}  // namespace markovds

#endif  // MARKOVDS_MODAL_HPP
