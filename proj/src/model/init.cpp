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

#include "dainrec/model/init.hpp"

#include <stdexcept>
#include <string>

#include "dainrec/numerics/ops.hpp"

namespace dain::model {
namespace {

void check_counts(const ModelConfig& config, std::size_t num_users, std::size_t num_items) {
  if (config.embedding_dim == 0) throw std::invalid_argument("embedding_dim must be >= 1");
  if (num_users == 0 || num_items == 0) {
    throw std::invalid_argument("model needs at least one user and one item (got " +
                                std::to_string(num_users) + " users, " +
                                std::to_string(num_items) + " items)");
  }
}

EmbeddingTable init_table(numerics::SeededRng& rng, std::size_t rows, std::size_t dim) {
  return EmbeddingTable(numerics::glorot_uniform(rng, dim, rows));
}

}  // namespace

DainModel init_dain(const ModelConfig& config, std::size_t num_users, std::size_t num_items,
                    numerics::SeededRng& rng) {
  check_counts(config, num_users, num_items);
  ContextSpec context;
  context.enabled = config.context_enabled;
  EmbeddingTable users = init_table(rng, num_users, config.embedding_dim);
  EmbeddingTable items = init_table(rng, num_items, config.embedding_dim);
  std::vector<MlpLayer> layers;
  std::size_t in = 2 * config.embedding_dim + context.width();
  for (std::size_t l = 0; l <= config.hidden_layers.size(); ++l) {
    const bool last = l == config.hidden_layers.size();
    const std::size_t out = last ? 1 : config.hidden_layers[l];
    if (out == 0) {
      throw std::invalid_argument("hidden layer " + std::to_string(l) + " has width 0");
    }
    MlpLayer layer;
    layer.weights = numerics::glorot_uniform(rng, in, out);
    layer.bias.assign(out, 0.0);
    layer.activation = last ? Activation::identity : Activation::relu;
    layers.push_back(std::move(layer));
    in = out;
  }
  return DainModel(std::move(users), std::move(items), std::move(layers), context);
}

MfModel init_mf(const ModelConfig& config, std::size_t num_users, std::size_t num_items,
                numerics::SeededRng& rng) {
  check_counts(config, num_users, num_items);
  MfModel m;
  m.user_table = init_table(rng, num_users, config.embedding_dim);
  m.item_table = init_table(rng, num_items, config.embedding_dim);
  m.user_bias.assign(num_users, 0.0);
  m.item_bias.assign(num_items, 0.0);
  m.global_bias = 0.0;
  return m;
}

AnyModel init_model(const ModelConfig& config, std::size_t num_users, std::size_t num_items,
                    numerics::SeededRng& rng) {
  if (config.kind == ModelKind::mf) return init_mf(config, num_users, num_items, rng);
  return init_dain(config, num_users, num_items, rng);
}

}  // namespace dain::model
