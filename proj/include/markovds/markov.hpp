/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

// Description: Finite-state Markov model over the characteristic points.
// The transition matrix is column-stochastic with column = source state, so
// the propagation p(t + dt) = M p(t) holds as written.

#ifndef MARKOVDS_MARKOV_HPP
#define MARKOVDS_MARKOV_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "markovds/states.hpp"

namespace markovds {

enum class FitScheme { kCrisp, kFuzzy };

/** Probability vector over the characteristic states. Construction validates
 *  nonnegativity and unit sum (within 1e-9) and then normalizes exactly, so
 *  long propagation chains cannot drift. */
class StateDistribution {
public:
  explicit StateDistribution(Eigen::VectorXd probabilities);

  static StateDistribution delta(std::size_t size, std::size_t index);
  static StateDistribution uniform(std::size_t size);

  std::size_t size() const noexcept { return static_cast<std::size_t>(p_.size()); }
  double operator[](std::size_t i) const { return p_[static_cast<Eigen::Index>(i)]; }
  const Eigen::VectorXd& vec() const noexcept { return p_; }

private:
  Eigen::VectorXd p_;
};

class MarkovModel {
public:
  /** matrix(i, j) = probability of moving to state i from state j over one
   *  step dt. Every column must sum to 1 within 1e-9 with entries in [0,1]. */
  MarkovModel(CharacteristicPointSet states, Eigen::MatrixXd matrix, double dt, FitScheme scheme,
              std::optional<double> alpha, std::int64_t transition_count,
              std::vector<std::string> axis_names);

  std::size_t size() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const CharacteristicPointSet& states() const noexcept { return states_; }
  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  double dt() const noexcept { return dt_; }
  FitScheme scheme() const noexcept { return scheme_; }
  std::optional<double> alpha() const noexcept { return alpha_; }
  std::int64_t transition_count() const noexcept { return transition_count_; }
  const std::vector<std::string>& axis_names() const noexcept { return axis_names_; }

private:
  CharacteristicPointSet states_;
  Eigen::MatrixXd matrix_;
  double dt_;
  FitScheme scheme_;
  std::optional<double> alpha_;
  std::int64_t transition_count_;
  std::vector<std::string> axis_names_;
};

/** Index of the characteristic point closest to `point` (squared distance,
 *  ties to the lowest index). */
std::size_t assign_state(const Eigen::VectorXd& point, const CharacteristicPointSet& states);

/** Fuzzy membership F_i = K_i / sum K_j with kernel K_i = 1/(R_i + alpha),
 *  R_i the squared distance to state i. alpha > 0 removes the singularity at
 *  the characteristic points themselves. */
StateDistribution fuzzy_membership(const Eigen::VectorXd& point,
                                   const CharacteristicPointSet& states, double alpha);

/** Default kernel width: small against the state spacing so memberships stay
 *  peaked. */
inline double default_fuzzy_alpha(double r0) { return 0.01 * r0; }

/** Count transitions between closest-state assignments of consecutive points
 *  (stride > 1 uses pairs (t, t + stride) and dt scales accordingly) and
 *  column-normalize. Columns with no observations become self-loops so that
 *  unvisited states do not leak probability. */
MarkovModel fit_crisp(const DelayPointSeries& series, const CharacteristicPointSet& states,
                      std::size_t stride = 1);

/** Accumulate the outer product F(t+dt) F(t)^T of fuzzy memberships over all
 *  consecutive pairs and column-normalize. With memberships collapsed to
 *  indicators this reduces exactly to fit_crisp. */
MarkovModel fit_fuzzy(const DelayPointSeries& series, const CharacteristicPointSet& states,
                      double alpha, std::size_t stride = 1);

/** One propagation step p(t + dt) = M p(t). */
StateDistribution step(const MarkovModel& model, const StateDistribution& p);

/** Iterate the propagation n_steps times and emit every distribution.
 *  After each step only the m largest entries survive (ties to the lowest
 *  index) and the rest are zeroed before renormalizing; this suppresses the
 *  fictitious diffusion introduced by discretizing the trajectory into
 *  finitely many cells. m defaults to dimension estimate + 1; m = state
 *  count keeps every component (plain propagation). */
std::vector<StateDistribution> forecast(const MarkovModel& model, const StateDistribution& p0,
                                        std::size_t n_steps,
                                        std::optional<std::size_t> sparsify = std::nullopt);

/** The recommended sparsification: dimension estimate + 1 (capped at the
 *  state count). */
std::size_t default_sparsify(const MarkovModel& model);

/** Probability-weighted mean of the characteristic-point coordinates. */
Eigen::VectorXd expected_coordinates(const CharacteristicPointSet& states,
                                     const StateDistribution& p);

/** Stationary distribution: the (suitably scaled) eigenvector of M for
 *  eigenvalue 1, with ||M pi - pi||_inf <= 1e-8. Throws when no eigenvalue
 *  lies within 1e-6 of 1. Implemented in modal.cpp on top of the spectral
 *  decomposition. */
StateDistribution stationary(const MarkovModel& model);

namespace detail {

/** Accumulate one fuzzy transition into the count matrix:
 *  counts += to * from^T. */
void add_fuzzy_transition(Eigen::MatrixXd& counts, const Eigen::VectorXd& from,
                          const Eigen::VectorXd& to);

/** Normalize columns to sum 1; all-zero columns become unit self-loops. */
Eigen::MatrixXd column_normalize_with_self_loops(Eigen::MatrixXd counts);

}  // namespace detail

}  // namespace markovds

#endif  // MARKOVDS_MARKOV_HPP
