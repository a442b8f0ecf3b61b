// Copyright 2026 The dainrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dainrec/cli/run_config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace dain::cli {

using nlohmann::json;

namespace {

template <typename T>
T get_as(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

std::size_t get_count(const json& j, const std::string& key, std::size_t min_value) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < static_cast<std::int64_t>(min_value)) {
    throw ConfigError("config key '" + key + "' must be an integer >= " + std::to_string(min_value));
  }
  return j.get<std::size_t>();
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");

  RunConfig cfg;
  bool context_given = false;
  for (const auto& [key, value] : root.items()) {
    if (key == "model") {
      const auto name = get_as<std::string>(value, key);
      if (name == "dain") {
        cfg.model = model::ModelKind::dain;
      } else if (name == "mf") {
        cfg.model = model::ModelKind::mf;
      } else {
        throw ConfigError("config key 'model' must be \"dain\" or \"mf\"");
      }
    } else if (key == "embedding_dim") {
      cfg.embedding_dim = get_count(value, key, 1);
    } else if (key == "layers") {
      if (!value.is_array()) throw ConfigError("config key 'layers' must be an array");
      cfg.layers.clear();
      for (const auto& w : value) cfg.layers.push_back(get_count(w, key, 1));
    } else if (key == "activation") {
      if (get_as<std::string>(value, key) != "relu") {
        throw ConfigError("config key 'activation' only supports \"relu\"");
      }
    } else if (key == "learning_rate") {
      cfg.learning_rate = get_as<double>(value, key);
    } else if (key == "batch_size") {
      cfg.batch_size = get_count(value, key, 1);
    } else if (key == "epochs") {
      cfg.epochs = get_count(value, key, 1);
    } else if (key == "seed") {
      cfg.seed = get_as<std::uint64_t>(value, key);
    } else if (key == "context_enabled") {
      cfg.context_enabled = get_as<bool>(value, key);
      context_given = true;
    } else if (key == "eval_negatives") {
      cfg.eval_negatives = get_count(value, key, 1);
    } else if (key == "k") {
      cfg.k = get_count(value, key, 1);
    } else if (key == "data_format") {
      try {
        cfg.data_format = data::parse_format(get_as<std::string>(value, key));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config key 'data_format': ") + e.what());
      }
    } else if (key == "weight_decay") {
      cfg.weight_decay = get_as<double>(value, key);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  if (cfg.model == model::ModelKind::mf) {
    if (context_given && cfg.context_enabled) {
      throw ConfigError("config key 'context_enabled' cannot be true for model \"mf\"");
    }
    cfg.context_enabled = false;
  }
  try {
    cfg.train_config().validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_run_config(text.str());
}

model::ModelConfig RunConfig::model_config() const {
  model::ModelConfig m;
  m.kind = model;
  m.embedding_dim = embedding_dim;
  m.hidden_layers = layers;
  m.context_enabled = model == model::ModelKind::dain && context_enabled;
  return m;
}

training::TrainConfig RunConfig::train_config() const {
  training::TrainConfig t;
  t.learning_rate = learning_rate;
  t.batch_size = batch_size;
  t.epochs = epochs;
  t.seed = seed;
  t.weight_decay = weight_decay;
  return t;
}

}  // namespace dain::cli
