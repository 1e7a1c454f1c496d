/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

// Description: JSON persistence of fitted models. Numbers are written with
// shortest round-trip precision, so save/load is lossless.

#ifndef MARKOVDS_MODEL_IO_HPP
#define MARKOVDS_MODEL_IO_HPP

#include <filesystem>
#include <json.hpp>
#include <stdexcept>

#include "markovds/markov.hpp"

namespace markovds {

/** Missing field, wrong type, or inconsistent content in a model file. */
class ModelSchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ModelFile {
  MarkovModel model;
  nlohmann::json meta;  // free-form, preserved across load/save; null if absent
};

/** Schema: { axis_names, r0, k, alpha (fuzzy only), dt, points (s rows of d
 *  coordinates), matrix (array of s columns of s entries), scheme,
 *  transition_count, dimension_estimate, meta (optional) }. */
void save_model(const MarkovModel& model, const std::filesystem::path& path,
                const nlohmann::json& meta = nullptr);

ModelFile load_model(const std::filesystem::path& path);

}  // namespace markovds

#endif  // MARKOVDS_MODEL_IO_HPP
