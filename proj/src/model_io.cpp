/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

#include "markovds/model_io.hpp"

#include <fstream>

namespace markovds {

using nlohmann::json;

namespace {

const json& require_field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ModelSchemaError(std::string("model file: missing field '") + key + "'");
  return *it;
}

double require_number(const json& doc, const char* key) {
  const json& field = require_field(doc, key);
  if (!field.is_number())
    throw ModelSchemaError(std::string("model file: field '") + key + "' must be a number");
  return field.get<double>();
}

Eigen::MatrixXd parse_points(const json& field) {
  if (!field.is_array() || field.empty())
    throw ModelSchemaError("model file: 'points' must be a non-empty array");
  const std::size_t s = field.size();
  const std::size_t d = field[0].is_array() ? field[0].size() : 0;
  if (d == 0) throw ModelSchemaError("model file: 'points' rows must be non-empty arrays");
  Eigen::MatrixXd points(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < s; ++i) {
    if (!field[i].is_array() || field[i].size() != d)
      throw ModelSchemaError("model file: ragged 'points' row " + std::to_string(i));
    for (std::size_t j = 0; j < d; ++j) {
      if (!field[i][j].is_number())
        throw ModelSchemaError("model file: non-numeric point coordinate");
      points(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          field[i][j].get<double>();
    }
  }
  return points;
}

Eigen::MatrixXd parse_matrix(const json& field, std::size_t s) {
  if (!field.is_array() || field.size() != s)
    throw ModelSchemaError("model file: 'matrix' must hold one column per state");
  Eigen::MatrixXd matrix(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s));
  for (std::size_t j = 0; j < s; ++j) {
    if (!field[j].is_array() || field[j].size() != s)
      throw ModelSchemaError("model file: 'matrix' column " + std::to_string(j) +
                             " has wrong length");
    for (std::size_t i = 0; i < s; ++i) {
      if (!field[j][i].is_number())
        throw ModelSchemaError("model file: non-numeric matrix entry");
      matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          field[j][i].get<double>();
    }
  }
  return matrix;
}

}  // namespace

void save_model(const MarkovModel& model, const std::filesystem::path& path, const json& meta) {
  json doc;
  doc["axis_names"] = model.axis_names();
  doc["r0"] = model.states().r0();
  doc["k"] = model.states().neighbor_factor();
  if (model.scheme() == FitScheme::kFuzzy) doc["alpha"] = *model.alpha();
  doc["dt"] = model.dt();
  doc["scheme"] = model.scheme() == FitScheme::kCrisp ? "crisp" : "fuzzy";
  doc["transition_count"] = model.transition_count();
  doc["dimension_estimate"] = model.states().dimension_estimate();

  const Eigen::MatrixXd& pts = model.states().points();
  json points = json::array();
  for (Eigen::Index i = 0; i < pts.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < pts.cols(); ++j) row.push_back(pts(i, j));
    points.push_back(std::move(row));
  }
  doc["points"] = std::move(points);

  const Eigen::MatrixXd& m = model.matrix();
  json matrix = json::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    json column = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) column.push_back(m(i, j));
    matrix.push_back(std::move(column));
  }
  doc["matrix"] = std::move(matrix);

  if (!meta.is_null()) doc["meta"] = meta;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << doc.dump(1) << '\n';
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file '" + path.string() + "'");

  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ModelSchemaError("model file: invalid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ModelSchemaError("model file: top level must be an object");

  try {
    const json& axes_field = require_field(doc, "axis_names");
    if (!axes_field.is_array()) throw ModelSchemaError("model file: 'axis_names' must be an array");
    std::vector<std::string> axis_names;
    for (const auto& a : axes_field) {
      if (!a.is_string()) throw ModelSchemaError("model file: axis names must be strings");
      axis_names.push_back(a.get<std::string>());
    }

    const double r0 = require_number(doc, "r0");
    const double k = require_number(doc, "k");
    const double dt = require_number(doc, "dt");

    const json& scheme_field = require_field(doc, "scheme");
    if (!scheme_field.is_string())
      throw ModelSchemaError("model file: 'scheme' must be a string");
    const std::string scheme_name = scheme_field.get<std::string>();
    FitScheme scheme;
    std::optional<double> alpha;
    if (scheme_name == "crisp") {
      scheme = FitScheme::kCrisp;
    } else if (scheme_name == "fuzzy") {
      scheme = FitScheme::kFuzzy;
      alpha = require_number(doc, "alpha");
    } else {
      throw ModelSchemaError("model file: unknown scheme '" + scheme_name + "'");
    }

    const json& count_field = require_field(doc, "transition_count");
    if (!count_field.is_number_integer())
      throw ModelSchemaError("model file: 'transition_count' must be an integer");
    const json& dim_field = require_field(doc, "dimension_estimate");
    if (!dim_field.is_number_integer())
      throw ModelSchemaError("model file: 'dimension_estimate' must be an integer");

    Eigen::MatrixXd points = parse_points(require_field(doc, "points"));
    Eigen::MatrixXd matrix =
        parse_matrix(require_field(doc, "matrix"), static_cast<std::size_t>(points.rows()));

    CharacteristicPointSet states(std::move(points), r0, k, dim_field.get<int>());
    MarkovModel model(std::move(states), std::move(matrix), dt, scheme, alpha,
                      count_field.get<std::int64_t>(), std::move(axis_names));
    json meta = doc.contains("meta") ? doc["meta"] : json(nullptr);
    return ModelFile{std::move(model), std::move(meta)};
  } catch (const ModelSchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw ModelSchemaError("model file: " + std::string(e.what()));
  }
}

}  // namespace markovds
