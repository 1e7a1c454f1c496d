/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

#include "markovds/markov.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace markovds {

namespace {

constexpr double kSumTolerance = 1e-9;
constexpr double kNegativeTolerance = 1e-12;

}  // namespace

StateDistribution::StateDistribution(Eigen::VectorXd probabilities) : p_(std::move(probabilities)) {
  if (p_.size() == 0) throw std::invalid_argument("state distribution must not be empty");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p_.size(); ++i) {
    if (!std::isfinite(p_[i])) throw std::invalid_argument("state distribution has non-finite entry");
    if (p_[i] < -kNegativeTolerance)
      throw std::invalid_argument("state distribution has negative entry " +
                                  std::to_string(p_[i]));
    if (p_[i] < 0.0) p_[i] = 0.0;
    sum += p_[i];
  }
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw std::invalid_argument("state distribution sums to " + std::to_string(sum) +
                                ", expected 1");
  p_ /= sum;
}

StateDistribution StateDistribution::delta(std::size_t size, std::size_t index) {
  if (index >= size) throw std::out_of_range("delta index out of range");
  Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size));
  p[static_cast<Eigen::Index>(index)] = 1.0;
  return StateDistribution(std::move(p));
}

StateDistribution StateDistribution::uniform(std::size_t size) {
  if (size == 0) throw std::invalid_argument("state distribution must not be empty");
  return StateDistribution(
      Eigen::VectorXd::Constant(static_cast<Eigen::Index>(size), 1.0 / static_cast<double>(size)));
}

MarkovModel::MarkovModel(CharacteristicPointSet states, Eigen::MatrixXd matrix, double dt,
                         FitScheme scheme, std::optional<double> alpha,
                         std::int64_t transition_count, std::vector<std::string> axis_names)
    : states_(std::move(states)),
      matrix_(std::move(matrix)),
      dt_(dt),
      scheme_(scheme),
      alpha_(alpha),
      transition_count_(transition_count),
      axis_names_(std::move(axis_names)) {
  const Eigen::Index s = matrix_.rows();
  if (matrix_.cols() != s) throw std::invalid_argument("transition matrix must be square");
  if (static_cast<std::size_t>(s) != states_.size())
    throw std::invalid_argument("transition matrix size does not match state count");
  if (!(dt_ > 0.0)) throw std::invalid_argument("model dt must be positive");
  if (axis_names_.size() != states_.dimension())
    throw std::invalid_argument("axis name count does not match state dimension");
  if (scheme_ == FitScheme::kFuzzy && (!alpha_ || !(*alpha_ > 0.0)))
    throw std::invalid_argument("fuzzy scheme needs a positive alpha");
  if (transition_count_ < 0) throw std::invalid_argument("transition count must be nonnegative");

  for (Eigen::Index j = 0; j < s; ++j) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < s; ++i) {
      const double m = matrix_(i, j);
      if (!(m >= 0.0 && m <= 1.0 + kNegativeTolerance))
        throw std::invalid_argument("transition matrix entry outside [0, 1]");
      sum += m;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
      throw std::invalid_argument("column " + std::to_string(j) + " sums to " +
                                  std::to_string(sum) + ", expected 1");
  }
}

std::size_t assign_state(const Eigen::VectorXd& point, const CharacteristicPointSet& states) {
  if (static_cast<std::size_t>(point.size()) != states.dimension())
    throw std::invalid_argument("point dimension does not match states");
  const Eigen::MatrixXd& pts = states.points();
  Eigen::Index best = 0;
  double best_dist = (pts.row(0).transpose() - point).squaredNorm();
  for (Eigen::Index i = 1; i < pts.rows(); ++i) {
    const double dist = (pts.row(i).transpose() - point).squaredNorm();
    if (dist < best_dist) {
      best_dist = dist;
      best = i;
    }
  }
  return static_cast<std::size_t>(best);
}

StateDistribution fuzzy_membership(const Eigen::VectorXd& point,
                                   const CharacteristicPointSet& states, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (static_cast<std::size_t>(point.size()) != states.dimension())
    throw std::invalid_argument("point dimension does not match states");
  const Eigen::MatrixXd& pts = states.points();
  Eigen::VectorXd kernel(pts.rows());
  for (Eigen::Index i = 0; i < pts.rows(); ++i)
    kernel[i] = 1.0 / ((pts.row(i).transpose() - point).squaredNorm() + alpha);
  kernel /= kernel.sum();
  return StateDistribution(std::move(kernel));
}

namespace detail {

void add_fuzzy_transition(Eigen::MatrixXd& counts, const Eigen::VectorXd& from,
                          const Eigen::VectorXd& to) {
  counts.noalias() += to * from.transpose();
}

Eigen::MatrixXd column_normalize_with_self_loops(Eigen::MatrixXd counts) {
  for (Eigen::Index j = 0; j < counts.cols(); ++j) {
    const double sum = counts.col(j).sum();
    if (sum > 0.0) {
      counts.col(j) /= sum;
    } else {
      counts.col(j).setZero();
      counts(j, j) = 1.0;
    }
  }
  return counts;
}

}  // namespace detail

namespace {

void check_fit_inputs(const DelayPointSeries& series, const CharacteristicPointSet& states,
                      std::size_t stride) {
  if (series.size() == 0) throw std::invalid_argument("cannot fit from an empty series");
  if (series.dimension() != states.dimension())
    throw std::invalid_argument("series dimension does not match states");
  if (stride == 0) throw std::invalid_argument("stride must be positive");
  if (series.size() < stride + 1)
    throw std::invalid_argument("series too short: no transition pair at stride " +
                                std::to_string(stride));
}

}  // namespace

MarkovModel fit_crisp(const DelayPointSeries& series, const CharacteristicPointSet& states,
                      std::size_t stride) {
  check_fit_inputs(series, states, stride);
  const auto s = static_cast<Eigen::Index>(states.size());
  const std::size_t n = series.size();

  std::vector<std::size_t> assigned(n);
  for (std::size_t t = 0; t < n; ++t) assigned[t] = assign_state(series.point(t), states);

  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(s, s);
  for (std::size_t t = 0; t + stride < n; ++t)
    counts(static_cast<Eigen::Index>(assigned[t + stride]),
           static_cast<Eigen::Index>(assigned[t])) += 1.0;

  return MarkovModel(states, detail::column_normalize_with_self_loops(std::move(counts)),
                     series.dt() * static_cast<double>(stride), FitScheme::kCrisp, std::nullopt,
                     static_cast<std::int64_t>(n - stride), series.axis_names());
}

MarkovModel fit_fuzzy(const DelayPointSeries& series, const CharacteristicPointSet& states,
                      double alpha, std::size_t stride) {
  check_fit_inputs(series, states, stride);
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  const auto s = static_cast<Eigen::Index>(states.size());
  const std::size_t n = series.size();

  std::vector<Eigen::VectorXd> memberships(n);
  for (std::size_t t = 0; t < n; ++t)
    memberships[t] = fuzzy_membership(series.point(t), states, alpha).vec();

  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(s, s);
  for (std::size_t t = 0; t + stride < n; ++t)
    detail::add_fuzzy_transition(counts, memberships[t], memberships[t + stride]);

  return MarkovModel(states, detail::column_normalize_with_self_loops(std::move(counts)),
                     series.dt() * static_cast<double>(stride), FitScheme::kFuzzy, alpha,
                     static_cast<std::int64_t>(n - stride), series.axis_names());
}

StateDistribution step(const MarkovModel& model, const StateDistribution& p) {
  if (p.size() != model.size())
    throw std::invalid_argument("distribution size does not match model");
  return StateDistribution(model.matrix() * p.vec());
}

std::vector<StateDistribution> forecast(const MarkovModel& model, const StateDistribution& p0,
                                        std::size_t n_steps, std::optional<std::size_t> sparsify) {
  if (p0.size() != model.size())
    throw std::invalid_argument("distribution size does not match model");
  const std::size_t s = model.size();
  const std::size_t keep = sparsify.value_or(default_sparsify(model));
  if (keep < 1 || keep > s)
    throw std::invalid_argument("sparsify count must lie in [1, state count]");

  std::vector<StateDistribution> out;
  out.reserve(n_steps);
  Eigen::VectorXd p = p0.vec();
  std::vector<Eigen::Index> order(s);
  for (std::size_t step_i = 0; step_i < n_steps; ++step_i) {
    p = model.matrix() * p;
    if (keep < s) {
      std::iota(order.begin(), order.end(), Eigen::Index{0});
      // Largest first; ties keep the lowest index.
      std::stable_sort(order.begin(), order.end(),
                       [&p](Eigen::Index a, Eigen::Index b) { return p[a] > p[b]; });
      Eigen::VectorXd kept = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(s));
      for (std::size_t m = 0; m < keep; ++m) kept[order[m]] = p[order[m]];
      const double sum = kept.sum();
      if (!(sum > 0.0)) throw std::logic_error("sparsified distribution lost all mass");
      p = kept / sum;
    }
    out.emplace_back(p);
    p = out.back().vec();  // exact-normalized copy
  }
  return out;
}

std::size_t default_sparsify(const MarkovModel& model) {
  return std::min(model.size(), static_cast<std::size_t>(model.states().dimension_estimate()) + 1);
}

Eigen::VectorXd expected_coordinates(const CharacteristicPointSet& states,
                                     const StateDistribution& p) {
  if (p.size() != states.size())
    throw std::invalid_argument("distribution size does not match states");
  return states.points().transpose() * p.vec();
}

}  // namespace markovds
