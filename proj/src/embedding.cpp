/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

#include "markovds/embedding.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace markovds {

DelayPointSeries::DelayPointSeries(Eigen::MatrixXd points, double dt,
                                   std::vector<std::string> axis_names)
    : points_(std::move(points)), dt_(dt), axis_names_(std::move(axis_names)) {
  if (points_.rows() == 0 || points_.cols() == 0)
    throw std::invalid_argument("delay point series must not be empty");
  if (static_cast<std::size_t>(points_.cols()) != axis_names_.size())
    throw std::invalid_argument("axis name count does not match point dimension");
  if (!(dt_ > 0.0)) throw std::invalid_argument("delay point series dt must be positive");
  if (!points_.allFinite()) throw std::invalid_argument("delay points must be finite");
  range_min_ = points_.colwise().minCoeff();
  range_max_ = points_.colwise().maxCoeff();
}

std::pair<double, double> DelayPointSeries::axis_range(std::size_t axis) const {
  if (axis >= dimension()) throw std::out_of_range("axis index out of range");
  const auto i = static_cast<Eigen::Index>(axis);
  return {range_min_[i], range_max_[i]};
}

std::vector<std::int64_t> DelayPointSeries::cells_per_axis(double h) const {
  if (!(h > 0.0)) throw std::invalid_argument("cell size must be positive");
  std::vector<std::int64_t> cells(dimension());
  for (std::size_t a = 0; a < dimension(); ++a) {
    const auto [lo, hi] = axis_range(a);
    cells[a] = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil((hi - lo) / h)));
  }
  return cells;
}

DelayPointSeries embed(const Telemetry& telemetry, const EmbeddingSpec& spec) {
  if (spec.axes.empty()) throw std::invalid_argument("embedding needs at least one axis");
  if (!(spec.cell_size > 0.0)) throw std::invalid_argument("cell size must be positive");
  std::set<std::string_view> seen;
  for (const auto& axis : spec.axes)
    if (!seen.insert(axis).second)
      throw std::invalid_argument("duplicate embedding axis '" + axis + "'");

  const auto n = static_cast<Eigen::Index>(telemetry.length());
  const auto d = static_cast<Eigen::Index>(spec.axes.size());
  Eigen::MatrixXd points(n, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    const Channel& ch = telemetry.channel(spec.axes[static_cast<std::size_t>(a)]);  // throws
    for (Eigen::Index i = 0; i < n; ++i)
      points(i, a) = ch.samples[static_cast<std::size_t>(i)] / ch.error;
  }
  return DelayPointSeries(std::move(points), telemetry.dt(), spec.axes);
}

std::vector<std::int64_t> grid_index(const Eigen::VectorXd& point, const DelayPointSeries& series,
                                     double cell_size) {
  if (!(cell_size > 0.0)) throw std::invalid_argument("cell size must be positive");
  if (static_cast<std::size_t>(point.size()) != series.dimension())
    throw std::invalid_argument("point dimension does not match series");
  std::vector<std::int64_t> index(series.dimension());
  for (std::size_t a = 0; a < series.dimension(); ++a) {
    const double lo = series.axis_range(a).first;
    index[a] =
        static_cast<std::int64_t>(std::floor((point[static_cast<Eigen::Index>(a)] - lo) / cell_size));
  }
  return index;
}

double information_estimate(const Telemetry& telemetry) {
  double info = 0.0;
  for (const auto& ch : telemetry.channels()) {
    if (ch.max_abs < ch.error)
      throw std::invalid_argument("channel '" + ch.name +
                                  "' is below resolution: max_abs < error");
    info += std::log(ch.max_abs / ch.error);
  }
  return info;
}

}  // namespace markovds
