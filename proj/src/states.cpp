/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

#include "markovds/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace markovds {

std::vector<int> neighbor_counts(const Eigen::MatrixXd& points, double r0, double k) {
  const Eigen::Index s = points.rows();
  const double threshold = r0 * k;
  std::vector<int> counts(static_cast<std::size_t>(s), 0);
  for (Eigen::Index i = 0; i < s; ++i) {
    for (Eigen::Index j = i + 1; j < s; ++j) {
      if ((points.row(i) - points.row(j)).squaredNorm() < threshold) {
        ++counts[static_cast<std::size_t>(i)];
        ++counts[static_cast<std::size_t>(j)];
      }
    }
  }
  return counts;
}

int robust_max_neighbors(const std::vector<int>& counts) {
  if (counts.empty()) throw std::invalid_argument("no neighbor counts");
  std::vector<int> sorted(counts);
  std::sort(sorted.begin(), sorted.end());
  // Nearest-rank percentile: rank ceil(0.95 * s), 1-based.
  const auto rank = static_cast<std::size_t>(
      std::ceil(0.95 * static_cast<double>(sorted.size())));
  return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

int estimate_dimension(const std::vector<int>& counts) {
  const int n_star = robust_max_neighbors(counts);
  // Halves round to even, so a robust max of 3, 4 or 5 all estimate N = 2.
  const int n = static_cast<int>(std::nearbyint(static_cast<double>(n_star) / 2.0));
  return std::max(1, n);
}

Adequacy adequacy(const std::vector<int>& counts, double threshold) {
  if (counts.empty()) throw std::invalid_argument("no neighbor counts");
  const auto with_enough = static_cast<double>(
      std::count_if(counts.begin(), counts.end(), [](int c) { return c > 2; }));
  Adequacy result;
  result.fraction = with_enough / static_cast<double>(counts.size());
  result.adequate = result.fraction >= threshold;
  return result;
}

CharacteristicPointSet::CharacteristicPointSet(Eigen::MatrixXd points, double r0, double k,
                                               std::optional<int> dimension_override)
    : points_(std::move(points)), r0_(r0), k_(k) {
  if (points_.rows() == 0) throw std::invalid_argument("characteristic point set is empty");
  if (!(r0_ > 0.0)) throw std::invalid_argument("r0 must be positive");
  if (!(k_ > 0.0)) throw std::invalid_argument("neighbor factor k must be positive");

  for (Eigen::Index i = 0; i < points_.rows(); ++i)
    for (Eigen::Index j = i + 1; j < points_.rows(); ++j)
      if ((points_.row(i) - points_.row(j)).squaredNorm() < r0_)
        throw std::invalid_argument("characteristic points " + std::to_string(i) + " and " +
                                    std::to_string(j) + " are closer than r0");

  neighbor_counts_ = markovds::neighbor_counts(points_, r0_, k_);
  dimension_estimate_ = dimension_override.value_or(estimate_dimension(neighbor_counts_));
  if (dimension_estimate_ < 1) throw std::invalid_argument("dimension estimate must be >= 1");
  adequacy_ = markovds::adequacy(neighbor_counts_);
}

CharacteristicPointSet select_points(const DelayPointSeries& series, double r0, double k) {
  if (series.size() == 0) throw std::invalid_argument("cannot select points from an empty series");
  if (!(r0 > 0.0)) throw std::invalid_argument("r0 must be positive");

  const Eigen::MatrixXd& pts = series.points();
  const Eigen::Index d = pts.cols();
  Eigen::MatrixXd selected(pts.rows(), d);
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < pts.rows(); ++i) {
    bool keep = true;
    for (Eigen::Index j = 0; j < count; ++j) {
      if ((selected.row(j) - pts.row(i)).squaredNorm() < r0) {
        keep = false;
        break;
      }
    }
    if (keep) selected.row(count++) = pts.row(i);
  }
  selected.conservativeResize(count, d);
  return CharacteristicPointSet(std::move(selected), r0, k);
}

}  // namespace markovds
