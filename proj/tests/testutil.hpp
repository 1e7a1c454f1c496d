/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

// Shared fixtures: tiny builders for series/state sets, a portable chain
// simulator, and a self-cleaning temp directory.

#ifndef MARKOVDS_TESTS_TESTUTIL_HPP
#define MARKOVDS_TESTS_TESTUTIL_HPP

#include <Eigen/Dense>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "markovds/embedding.hpp"
#include "markovds/states.hpp"

namespace testutil {

inline markovds::DelayPointSeries series_1d(const std::vector<double>& values, double dt = 1.0) {
  Eigen::MatrixXd pts(static_cast<Eigen::Index>(values.size()), 1);
  for (std::size_t i = 0; i < values.size(); ++i)
    pts(static_cast<Eigen::Index>(i), 0) = values[i];
  return markovds::DelayPointSeries(std::move(pts), dt, {"x"});
}

inline markovds::DelayPointSeries series_nd(const Eigen::MatrixXd& points, double dt = 1.0) {
  std::vector<std::string> names;
  for (Eigen::Index a = 0; a < points.cols(); ++a) names.push_back("a" + std::to_string(a));
  return markovds::DelayPointSeries(points, dt, names);
}

inline markovds::CharacteristicPointSet states_1d(const std::vector<double>& values,
                                                  double r0 = 1.0, double k = 1.4) {
  Eigen::MatrixXd pts(static_cast<Eigen::Index>(values.size()), 1);
  for (std::size_t i = 0; i < values.size(); ++i)
    pts(static_cast<Eigen::Index>(i), 0) = values[i];
  return markovds::CharacteristicPointSet(std::move(pts), r0, k);
}

/** Uniform double in [0, 1) from the raw engine; distribution-free so the
 *  stream is identical on every standard library. */
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/** Sample a state trajectory of a column-stochastic chain by inverse CDF. */
inline std::vector<int> simulate_chain(const Eigen::MatrixXd& matrix, int start,
                                       std::size_t n_steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> states;
  states.reserve(n_steps + 1);
  int current = start;
  states.push_back(current);
  for (std::size_t t = 0; t < n_steps; ++t) {
    const double u = uniform01(rng);
    double cumulative = 0.0;
    int next = static_cast<int>(matrix.rows()) - 1;
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
      cumulative += matrix(i, current);
      if (u < cumulative) {
        next = static_cast<int>(i);
        break;
      }
    }
    current = next;
    states.push_back(current);
  }
  return states;
}

class TempDir {
public:
  TempDir() {
    static std::atomic<unsigned> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("markovds-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace testutil

#endif  // MARKOVDS_TESTS_TESTUTIL_HPP
