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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "dainrec/data/parse.hpp"
#include "dainrec/model/init.hpp"
#include "dainrec/training/adam.hpp"

namespace dain::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Run configuration read from JSON. Every key is optional; unknown keys are
/// rejected. Defaults: dain, 64-dim embeddings, hidden layers 128/64/32,
/// relu, learning rate 0.001, batch 256, 30 epochs, seed 42, context on
/// (dain only), 99 evaluation negatives, k = 10, movielens input.
struct RunConfig {
  model::ModelKind model = model::ModelKind::dain;
  std::size_t embedding_dim = 64;
  std::vector<std::size_t> layers{128, 64, 32};
  std::string activation = "relu";
  double learning_rate = 0.001;
  std::size_t batch_size = 256;
  std::size_t epochs = 30;
  std::uint64_t seed = 42;
  bool context_enabled = true;
  std::size_t eval_negatives = 99;
  std::size_t k = 10;
  data::LogFormat data_format = data::LogFormat::movielens;
  double weight_decay = 0.0;

  model::ModelConfig model_config() const;
  training::TrainConfig train_config() const;
};

RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace dain::cli
