/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

// Description: Characteristic points in the delay space. A point is retained
// when its squared distance to every previously retained point is at least
// r0; retained points become the discrete Markov states. Neighbor counts
// against the threshold r0*k drive the dimension estimate and the adequacy
// check for R0.

#ifndef MARKOVDS_STATES_HPP
#define MARKOVDS_STATES_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "markovds/embedding.hpp"

namespace markovds {

inline constexpr double kDefaultNeighborFactor = 1.4;
inline constexpr double kDefaultAdequacyThreshold = 0.75;

struct Adequacy {
  double fraction = 0.0;  // share of points with more than 2 neighbors
  bool adequate = false;
};

/** Pairwise neighbor counts: count_i = |{ j != i : |X_i - X_j|^2 < r0*k }|.
 *  Symmetric by construction. Brute force O(s^2). */
std::vector<int> neighbor_counts(const Eigen::MatrixXd& points, double r0, double k);

/** Robust maximum of the neighbor counts: the nearest-rank 95th percentile,
 *  discarding lone overshoots caused by sampling unevenness. */
int robust_max_neighbors(const std::vector<int>& counts);

/** Dimension estimate N = max(1, round(n_star / 2)) where n_star is the
 *  robust maximum neighbor count; in a continuum each interior point has 2N
 *  neighbors. */
int estimate_dimension(const std::vector<int>& counts);

/** Fraction of points with more than 2 neighbors; below the threshold the
 *  model is considered under-trained for the chosen r0. */
Adequacy adequacy(const std::vector<int>& counts, double threshold = kDefaultAdequacyThreshold);

/** Characteristic points plus the derived neighbor statistics. Immutable. */
class CharacteristicPointSet {
public:
  /** points: one row per characteristic point. Enforces the pairwise
   *  squared-distance invariant |X_i - X_j|^2 >= r0 and computes neighbor
   *  counts, dimension estimate and adequacy. `dimension_override` replaces
   *  the computed estimate (used when loading persisted models). */
  CharacteristicPointSet(Eigen::MatrixXd points, double r0, double k = kDefaultNeighborFactor,
                         std::optional<int> dimension_override = std::nullopt);

  std::size_t size() const noexcept { return static_cast<std::size_t>(points_.rows()); }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(points_.cols()); }
  const Eigen::MatrixXd& points() const noexcept { return points_; }
  Eigen::VectorXd point(std::size_t i) const { return points_.row(static_cast<Eigen::Index>(i)); }
  double r0() const noexcept { return r0_; }
  double neighbor_factor() const noexcept { return k_; }
  const std::vector<int>& neighbor_counts() const noexcept { return neighbor_counts_; }
  int dimension_estimate() const noexcept { return dimension_estimate_; }
  double adequacy_fraction() const noexcept { return adequacy_.fraction; }
  bool adequate() const noexcept { return adequacy_.adequate; }

private:
  Eigen::MatrixXd points_;
  double r0_;
  double k_;
  std::vector<int> neighbor_counts_;
  int dimension_estimate_;
  Adequacy adequacy_;
};

/** Single forward pass in time order: the first point is always kept, and a
 *  later point is kept iff no already-kept point lies within squared distance
 *  r0 of it. */
CharacteristicPointSet select_points(const DelayPointSeries& series, double r0,
                                     double k = kDefaultNeighborFactor);

}  // namespace markovds

#endif  // MARKOVDS_STATES_HPP
