/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

// Description: Dimensionless delay space. Every axis is a telemetry channel
// divided by its measurement error, so Euclidean distance 1 means "differs by
// one instrument resolution" and sub-unit distances carry no information.

#ifndef MARKOVDS_EMBEDDING_HPP
#define MARKOVDS_EMBEDDING_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "markovds/telemetry.hpp"

namespace markovds {

/** Recipe for the delay space: which channels become axes, and the edge
 *  length of a hypercubic grid cell in error units. */
struct EmbeddingSpec {
  std::vector<std::string> axes;
  double cell_size = 1.0;
};

/** Time-ordered points in the dimensionless delay space. Coordinates are in
 *  error units (multiples of the channel's X_delta). */
class DelayPointSeries {
public:
  /** points: one row per instant, one column per axis. */
  DelayPointSeries(Eigen::MatrixXd points, double dt, std::vector<std::string> axis_names);

  std::size_t size() const noexcept { return static_cast<std::size_t>(points_.rows()); }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(points_.cols()); }
  const Eigen::MatrixXd& points() const noexcept { return points_; }
  Eigen::VectorXd point(std::size_t i) const { return points_.row(static_cast<Eigen::Index>(i)); }
  double dt() const noexcept { return dt_; }
  const std::vector<std::string>& axis_names() const noexcept { return axis_names_; }

  /** (min, max) of the stored coordinates along one axis. */
  std::pair<double, double> axis_range(std::size_t axis) const;

  /** Cells per axis for cell edge h: ceil(range / h), at least 1. */
  std::vector<std::int64_t> cells_per_axis(double h) const;

private:
  Eigen::MatrixXd points_;
  double dt_;
  std::vector<std::string> axis_names_;
  Eigen::VectorXd range_min_;
  Eigen::VectorXd range_max_;
};

/** Map telemetry into the delay space: coordinate = sample / X_delta,
 *  one point per instant, order preserved. */
DelayPointSeries embed(const Telemetry& telemetry, const EmbeddingSpec& spec);

/** Hypercubic grid coordinates of a normalized point: floor((x - min)/h)
 *  per axis, anchored at the series' axis minima. Cells are half-open, so
 *  every point lands in exactly one cell; out-of-range points simply get
 *  out-of-range indices. */
std::vector<std::int64_t> grid_index(const Eigen::VectorXd& point, const DelayPointSeries& series,
                                     double cell_size);

/** Information estimate I = sum over channels of ln(X_max / X_delta), in
 *  nats: an upper bound on what the instruments can resolve. Throws when a
 *  channel's range is below its error. */
double information_estimate(const Telemetry& telemetry);

}  // namespace markovds

#endif  // MARKOVDS_EMBEDDING_HPP
