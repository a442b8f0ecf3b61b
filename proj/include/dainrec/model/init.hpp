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
#include <variant>
#include <vector>

#include "dainrec/model/dain.hpp"
#include "dainrec/model/mf.hpp"
#include "dainrec/numerics/rng.hpp"

namespace dain::model {

enum class ModelKind { dain, mf };

struct ModelConfig {
  ModelKind kind = ModelKind::dain;
  std::size_t embedding_dim = 64;
  std::vector<std::size_t> hidden_layers{128, 64, 32};  // a scalar output layer is appended
  bool context_enabled = true;                           // ignored for mf
};

using AnyModel = std::variant<DainModel, MfModel>;

/// Glorot-uniform embeddings and weights, zero biases. Draw order: user table,
/// item table, then each layer's weights.
DainModel init_dain(const ModelConfig& config, std::size_t num_users, std::size_t num_items,
                    numerics::SeededRng& rng);
MfModel init_mf(const ModelConfig& config, std::size_t num_users, std::size_t num_items,
                numerics::SeededRng& rng);
AnyModel init_model(const ModelConfig& config, std::size_t num_users, std::size_t num_items,
                    numerics::SeededRng& rng);

}  // namespace dain::model
