/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

#include "markovds/modal.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "testutil.hpp"

using namespace markovds;

namespace {

constexpr double kPi = std::numbers::pi;

MarkovModel model_from_matrix(const Eigen::MatrixXd& matrix, double dt = 1.0) {
  std::vector<double> coords;
  for (Eigen::Index i = 0; i < matrix.rows(); ++i)
    coords.push_back(10.0 * static_cast<double>(i));
  return MarkovModel(testutil::states_1d(coords), matrix, dt, FitScheme::kCrisp, std::nullopt, 0,
                     {"x"});
}

Eigen::MatrixXd cycle3() {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
  m(1, 0) = 1.0;
  m(2, 1) = 1.0;
  m(0, 2) = 1.0;
  return m;
}

Eigen::MatrixXd two_state(double a, double b) {
  Eigen::MatrixXd m(2, 2);
  m << a, b, 1.0 - a, 1.0 - b;
  return m;
}

}  // namespace

TEST_CASE("identity matrix has a flat unit spectrum") {
  ModalResult r = decompose(model_from_matrix(Eigen::MatrixXd::Identity(3, 3)));
  REQUIRE(r.size() == 3);
  for (const auto& lambda : r.eigenvalues()) {
    CHECK(lambda.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(lambda.imag()) <= 1e-12);
    }
  CHECK(r.attractor_count() == 3);
  CHECK(real_eigenvalue_count(r) == 3);
  for (std::size_t m = 0; m < 3; ++m) CHECK_FALSE(r.period(m).has_value());
}

TEST_CASE("two-state chain spectrum matches the closed-form roots") {
  ModalResult r = decompose(model_from_matrix(two_state(0.9, 0.1)));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r.eigenvalues()[0] - 1.0) <= 1e-10);
  CHECK(std::abs(r.eigenvalues()[1] - 0.8) <= 1e-10);
  CHECK(real_eigenvalue_count(r) == 2);
  CHECK(r.attractor_count() == 1);
}

TEST_CASE("3-cycle permutation has the cube roots of unity") {
  const double dt = 0.25;
  ModalResult r = decompose(model_from_matrix(cycle3(), dt));
  REQUIRE(r.size() == 3);

  const std::complex<double> omega = std::polar(1.0, 2.0 * kPi / 3.0);
  CHECK(std::abs(r.eigenvalues()[0] - 1.0) <= 1e-10);
  CHECK(std::abs(r.eigenvalues()[1] - omega) <= 1e-10);
  CHECK(std::abs(r.eigenvalues()[2] - std::conj(omega)) <= 1e-10);

  // The rotating pair literally has period 3 steps under step().
  REQUIRE(r.period(1).has_value());
  CHECK(std::abs(*r.period(1) - 3.0 * dt) <= 1e-12);
  CHECK(std::abs(*r.damping(1)) <= 1e-10);  // undamped: |lambda| = 1

  CHECK(real_eigenvalue_count(r) == 1);
  CHECK(r.attractor_count() == 1);
}

TEST_CASE("mode_frequency turns the eigenvalue phase into a period") {
  SUBCASE("cube root of unity at dt = 1") {
    auto timing = mode_frequency(std::polar(1.0, 2.0 * kPi / 3.0), 1.0);
    REQUIRE(timing.has_value());
    CHECK(timing->steps_per_cycle == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(timing->frequency_hz == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(timing->period_s == doctest::Approx(3.0).epsilon(1e-14));
  }
  SUBCASE("real positive eigenvalue is non-oscillatory") {
    CHECK_FALSE(mode_frequency({0.8, 0.0}, 1.0).has_value());
  }
  SUBCASE("negative real eigenvalue is the two-step Nyquist mode") {
    auto timing = mode_frequency({-0.5, 0.0}, 0.01);
    REQUIRE(timing.has_value());
    CHECK(timing->steps_per_cycle == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(timing->frequency_hz == doctest::Approx(50.0).epsilon(1e-12));
  }
}

TEST_CASE("mode_damping is log-modulus per phase advance") {
  CHECK(mode_damping(std::polar(1.0, 0.3), 0.3 / (2.0 * kPi), 1.0) ==
        doctest::Approx(0.0).epsilon(1e-15));

  auto timing1 = mode_frequency(std::polar(0.9, kPi / 4.0), 1.0);
  REQUIRE(timing1.has_value());
  CHECK(mode_damping(std::polar(0.9, kPi / 4.0), timing1->frequency_hz, 1.0) ==
        doctest::Approx(std::log(0.9) / (kPi / 4.0)).epsilon(1e-12));
  CHECK(mode_damping(std::polar(0.9, kPi / 4.0), timing1->frequency_hz, 1.0) ==
        doctest::Approx(-0.13414).epsilon(1e-4));

  auto timing2 = mode_frequency(std::polar(0.9, kPi / 2.0), 1.0);
  REQUIRE(timing2.has_value());
  CHECK(mode_damping(std::polar(0.9, kPi / 2.0), timing2->frequency_hz, 1.0) ==
        doctest::Approx(-0.06707).epsilon(1e-4));

  CHECK_THROWS(mode_damping({0.8, 0.0}, 0.0, 1.0));  // non-oscillatory
}

TEST_CASE("damping is invariant to the step size") {
  const std::complex<double> lambda = std::polar(0.95, 0.4);
  for (double dt : {0.001, 0.02, 1.0}) {
    auto timing = mode_frequency(lambda, dt);
    REQUIRE(timing.has_value());
    CHECK(mode_damping(lambda, timing->frequency_hz, dt) ==
          doctest::Approx(std::log(0.95) / 0.4).epsilon(1e-12));
  }
}

TEST_CASE("attractor count distinguishes reducible chains") {
  SUBCASE("irreducible aperiodic chain has one attractor") {
    CHECK(decompose(model_from_matrix(two_state(0.7, 0.4))).attractor_count() == 1);
  }
  SUBCASE("two disjoint chains have two attractors") {
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(4, 4);
    block.block<2, 2>(0, 0) = two_state(0.9, 0.1);
    block.block<2, 2>(2, 2) = two_state(0.8, 0.3);
    ModalResult r = decompose(model_from_matrix(block));
    CHECK(r.attractor_count() == 2);
    CHECK(attractor_count(r, 1e-3) == 2);
  }
}

TEST_CASE("real eigenvalue count") {
  CHECK(real_eigenvalue_count(decompose(model_from_matrix(two_state(0.9, 0.1)))) == 2);
  CHECK(real_eigenvalue_count(decompose(model_from_matrix(cycle3()))) == 1);
  CHECK(real_eigenvalue_count(decompose(model_from_matrix(Eigen::MatrixXd::Identity(4, 4)))) == 4);
}

TEST_CASE("eigenform of the unit eigenvalue is the stationary distribution") {
  ModalResult r = decompose(model_from_matrix(two_state(0.8, 0.4)));
  EigenformTable table = eigenform_table(r, model_from_matrix(two_state(0.8, 0.4)).states());
  REQUIRE(table.mode_indices.size() == 2);
  CHECK(table.amplitudes(0, 0).real() == doctest::Approx(r.stationary()[0]).epsilon(1e-9));
  CHECK(table.amplitudes(1, 0).real() == doctest::Approx(r.stationary()[1]).epsilon(1e-9));
  CHECK(std::abs(table.amplitudes(0, 0).imag()) <= 1e-12);
}

TEST_CASE("rotating eigenform of the 3-cycle has equal moduli and 2*pi/3 phase steps") {
  MarkovModel m = model_from_matrix(cycle3());
  ModalResult r = decompose(m);
  EigenformTable table = eigenform_table(r, m.states(), std::vector<int>{1});
  REQUIRE(table.amplitudes.rows() == 3);
  REQUIRE(table.amplitudes.cols() == 1);

  const double m0 = std::abs(table.amplitudes(0, 0));
  CHECK(m0 == doctest::Approx(1.0).epsilon(1e-9));  // unit max modulus scaling
  CHECK(std::abs(table.amplitudes(1, 0)) == doctest::Approx(m0).epsilon(1e-9));
  CHECK(std::abs(table.amplitudes(2, 0)) == doctest::Approx(m0).epsilon(1e-9));

  // Following the cycle, the phase advances by a constant +-2*pi/3.
  const double d01 = std::arg(table.amplitudes(1, 0) / table.amplitudes(0, 0));
  const double d12 = std::arg(table.amplitudes(2, 0) / table.amplitudes(1, 0));
  CHECK(std::abs(d01) == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-9));
  CHECK(std::abs(d12) == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-9));
  CHECK(d01 * d12 > 0.0);  // same direction around the cycle
}

TEST_CASE("eigenform table shape and validation") {
  MarkovModel m = model_from_matrix(cycle3());
  ModalResult r = decompose(m);
  EigenformTable table = eigenform_table(r, m.states());
  CHECK(table.coordinates.rows() == 3);
  CHECK(table.amplitudes.cols() == 3);
  CHECK(table.mode_indices == std::vector<int>{0, 1, 2});
  CHECK_THROWS(eigenform_table(r, m.states(), std::vector<int>{3}));
}

TEST_CASE("2x2 oracle grid: eigenvalues match the closed-form roots") {
  for (int i = 1; i <= 20; ++i) {
    for (int j = 1; j <= 20; ++j) {
      const double a = (static_cast<double>(i) - 0.5) / 20.0;
      const double b = (static_cast<double>(j) - 0.5) / 20.0;
      ModalResult r = decompose(model_from_matrix(two_state(a, b)));
      // Characteristic roots of [[a, b], [1-a, 1-b]]: 1 and a - b.
      CHECK(std::abs(r.eigenvalues()[0] - 1.0) <= 1e-10);
      CHECK(std::abs(r.eigenvalues()[1] - (a - b)) <= 1e-10);
    }
  }
}

TEST_CASE("spectral bound and conjugate closure on fitted models") {
  std::mt19937_64 rng(47);
  std::vector<double> walk(600);
  double x = 0.0;
  for (auto& w : walk) {
    x += (testutil::uniform01(rng) - 0.5) * 2.5;
    w = 0.9 * x;
  }
  auto series = testutil::series_1d(walk);
  CharacteristicPointSet states = select_points(series, 1.0);
  MarkovModel m = fit_crisp(series, states);
  ModalResult r = decompose(m);

  for (const auto& lambda : r.eigenvalues()) CHECK(std::abs(lambda) <= 1.0 + 1e-8);

  for (const auto& lambda : r.eigenvalues()) {
    if (std::abs(lambda.imag()) <= 1e-9) continue;
    bool has_partner = false;
    for (const auto& other : r.eigenvalues())
      if (std::abs(other - std::conj(lambda)) <= 1e-9) has_partner = true;
    CHECK(has_partner);
  }
}

TEST_CASE("spectral reconstruction for well-conditioned eigenbases") {
  for (const Eigen::MatrixXd& matrix :
       {two_state(0.9, 0.1), two_state(0.3, 0.8), cycle3(), Eigen::MatrixXd(Eigen::MatrixXd::Identity(3, 3))}) {
    ModalResult r = decompose(model_from_matrix(matrix));
    if (r.eigenbasis_condition() > 1e8) continue;  // reported, reconstruction skipped
    Eigen::MatrixXcd lambda = Eigen::MatrixXcd::Zero(matrix.rows(), matrix.rows());
    for (Eigen::Index i = 0; i < matrix.rows(); ++i)
      lambda(i, i) = r.eigenvalues()[static_cast<std::size_t>(i)];
    const Eigen::MatrixXcd reconstructed =
        r.eigenforms() * lambda * r.eigenforms().inverse();
    CHECK((reconstructed - matrix.cast<std::complex<double>>()).cwiseAbs().maxCoeff() <= 1e-7);
  }
}

TEST_CASE("decompose rejects non-stochastic input early") {
  // Bypassing the fit path: a matrix with a column sum of 1.2 cannot even be
  // constructed as a MarkovModel.
  Eigen::MatrixXd bad(2, 2);
  bad << 0.9, 0.1, 0.3, 0.9;
  CHECK_THROWS(model_from_matrix(bad));
}

TEST_CASE("a constant series collapses to a single absorbing state") {
  auto series = testutil::series_1d({3.0, 3.0, 3.0, 3.0});
  CharacteristicPointSet states = select_points(series, 1.0);
  REQUIRE(states.size() == 1);
  MarkovModel m = fit_crisp(series, states);
  CHECK(m.matrix()(0, 0) == 1.0);
  ModalResult r = decompose(m);
  CHECK(r.attractor_count() == 1);
  CHECK(r.stationary()[0] == 1.0);
}

TEST_CASE("numerically zero eigenvalues carry no timing entries") {
  // Uniform columns: rank 1, spectrum {1, 0, 0, 0}.
  ModalResult r = decompose(model_from_matrix(Eigen::MatrixXd::Constant(4, 4, 0.25)));
  CHECK(std::abs(r.eigenvalues()[0] - 1.0) <= 1e-12);
  for (std::size_t m = 1; m < 4; ++m) {
    CHECK(std::abs(r.eigenvalues()[m]) <= 1e-12);
    CHECK_FALSE(r.period(m).has_value());
    CHECK_FALSE(r.damping(m).has_value());
  }
}

TEST_CASE("exactly one unit eigenvalue or a reducible chain") {
  ModalResult irreducible = decompose(model_from_matrix(two_state(0.6, 0.2)));
  int near_one = 0;
  for (const auto& lambda : irreducible.eigenvalues())
    if (std::abs(lambda - 1.0) <= 1e-8) ++near_one;
  CHECK(near_one == 1);

  ModalResult reducible = decompose(model_from_matrix(Eigen::MatrixXd::Identity(3, 3)));
  CHECK(reducible.attractor_count() > 1);
}
