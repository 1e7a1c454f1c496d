/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

#include "markovds/model_io.hpp"

#include <doctest.h>

#include <random>

#include "testutil.hpp"

using namespace markovds;
using testutil::TempDir;

namespace {

MarkovModel fitted_model(FitScheme scheme) {
  std::mt19937_64 rng(53);
  std::vector<double> walk(300);
  double x = 0.0;
  for (auto& w : walk) {
    x += (testutil::uniform01(rng) - 0.5) * 3.0;
    w = x / 3.0;
  }
  auto series = testutil::series_1d(walk, 0.02);
  CharacteristicPointSet states = select_points(series, 1.0);
  return scheme == FitScheme::kCrisp ? fit_crisp(series, states)
                                     : fit_fuzzy(series, states, 0.013);
}

}  // namespace

TEST_CASE("model save/load round-trip is lossless") {
  for (FitScheme scheme : {FitScheme::kCrisp, FitScheme::kFuzzy}) {
    MarkovModel model = fitted_model(scheme);
    TempDir dir;
    save_model(model, dir.file("model.json"));
    ModelFile loaded = load_model(dir.file("model.json"));

    CHECK(loaded.model.axis_names() == model.axis_names());
    CHECK(loaded.model.dt() == model.dt());
    CHECK(loaded.model.scheme() == model.scheme());
    CHECK(loaded.model.alpha() == model.alpha());
    CHECK(loaded.model.transition_count() == model.transition_count());
    CHECK(loaded.model.states().r0() == model.states().r0());
    CHECK(loaded.model.states().neighbor_factor() == model.states().neighbor_factor());
    CHECK(loaded.model.states().dimension_estimate() == model.states().dimension_estimate());
    REQUIRE(loaded.model.size() == model.size());
    CHECK((loaded.model.matrix() - model.matrix()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((loaded.model.states().points() - model.states().points()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(loaded.meta.is_null());
  }
}

TEST_CASE("metadata is preserved across save and load") {
  MarkovModel model = fitted_model(FitScheme::kCrisp);
  TempDir dir;
  nlohmann::json meta;
  meta["seed"] = 42;
  meta["channel_errors"]["x"] = 0.01;
  save_model(model, dir.file("model.json"), meta);
  ModelFile loaded = load_model(dir.file("model.json"));
  CHECK(loaded.meta == meta);
}

TEST_CASE("a stored dimension estimate overrides the recomputed one") {
  MarkovModel model = fitted_model(FitScheme::kCrisp);
  TempDir dir;
  save_model(model, dir.file("model.json"));

  // Tamper with the stored estimate; the loader must trust the file.
  nlohmann::json doc = nlohmann::json::parse(testutil::read_file(dir.file("model.json")));
  doc["dimension_estimate"] = 9;
  testutil::write_file(dir.file("model.json"), doc.dump());
  CHECK(load_model(dir.file("model.json")).model.states().dimension_estimate() == 9);
}

TEST_CASE("schema validation rejects corrupted model files") {
  MarkovModel model = fitted_model(FitScheme::kCrisp);
  TempDir dir;
  save_model(model, dir.file("model.json"));
  const std::string good = testutil::read_file(dir.file("model.json"));

  SUBCASE("invalid JSON") {
    testutil::write_file(dir.file("bad.json"), "{ not json");
    CHECK_THROWS_AS(load_model(dir.file("bad.json")), ModelSchemaError);
  }
  SUBCASE("missing field") {
    nlohmann::json doc = nlohmann::json::parse(good);
    doc.erase("matrix");
    testutil::write_file(dir.file("bad.json"), doc.dump());
    CHECK_THROWS_AS(load_model(dir.file("bad.json")), ModelSchemaError);
  }
  SUBCASE("wrong field type") {
    nlohmann::json doc = nlohmann::json::parse(good);
    doc["dt"] = "fast";
    testutil::write_file(dir.file("bad.json"), doc.dump());
    CHECK_THROWS_AS(load_model(dir.file("bad.json")), ModelSchemaError);
  }
  SUBCASE("unknown scheme") {
    nlohmann::json doc = nlohmann::json::parse(good);
    doc["scheme"] = "mushy";
    testutil::write_file(dir.file("bad.json"), doc.dump());
    CHECK_THROWS_AS(load_model(dir.file("bad.json")), ModelSchemaError);
  }
  SUBCASE("ragged matrix column") {
    nlohmann::json doc = nlohmann::json::parse(good);
    doc["matrix"][0].erase(0);
    testutil::write_file(dir.file("bad.json"), doc.dump());
    CHECK_THROWS_AS(load_model(dir.file("bad.json")), ModelSchemaError);
  }
  SUBCASE("non-stochastic column") {
    nlohmann::json doc = nlohmann::json::parse(good);
    for (auto& cell : doc["matrix"][0]) cell = 0.0;
    doc["matrix"][0][0] = 0.5;  // column sums to 0.5
    testutil::write_file(dir.file("bad.json"), doc.dump());
    CHECK_THROWS_AS(load_model(dir.file("bad.json")), ModelSchemaError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS(load_model(dir.file("absent.json")));
  }
}
