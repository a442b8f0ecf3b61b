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
#include <optional>
#include <span>
#include <vector>

#include "dainrec/model/context.hpp"
#include "dainrec/model/embedding.hpp"
#include "dainrec/model/gradients.hpp"
#include "dainrec/numerics/matrix.hpp"

namespace dain::model {

enum class Activation : std::uint8_t { relu = 0, identity = 1 };

struct MlpLayer {
  numerics::Matrix weights;  // out_dim × in_dim
  numerics::Vector bias;     // out_dim
  Activation activation = Activation::relu;

  std::size_t in_dim() const noexcept { return weights.cols(); }
  std::size_t out_dim() const noexcept { return weights.rows(); }

  friend bool operator==(const MlpLayer&, const MlpLayer&) = default;
};

/// Embedding lookup for user and item, optional one-hot time context, then an
/// MLP whose last layer emits one logit; the score is sigmoid(logit).
///
/// Layer 0 consumes concat(p_u, q_i[, c]) of width 2K (+ C when context is on).
/// Hidden layers use ReLU; the final layer is identity with out_dim 1.
class DainModel {
 public:
  DainModel() = default;
  /// Throws std::invalid_argument if any architecture invariant is violated.
  DainModel(EmbeddingTable users, EmbeddingTable items, std::vector<MlpLayer> layers,
            ContextSpec context);

  const EmbeddingTable& user_table() const noexcept { return users_; }
  const EmbeddingTable& item_table() const noexcept { return items_; }
  EmbeddingTable& user_table() noexcept { return users_; }
  EmbeddingTable& item_table() noexcept { return items_; }
  const std::vector<MlpLayer>& layers() const noexcept { return layers_; }
  std::vector<MlpLayer>& layers() noexcept { return layers_; }
  const ContextSpec& context() const noexcept { return context_; }

  std::size_t num_users() const noexcept { return users_.num_rows(); }
  std::size_t num_items() const noexcept { return items_.num_rows(); }
  std::size_t embedding_dim() const noexcept { return users_.dim(); }
  std::size_t input_width() const noexcept { return 2 * embedding_dim() + context_.width(); }

  /// FNV-1a hash of every architecture dimension.
  std::uint64_t arch_fingerprint() const noexcept;

  /// Order: user table, item table, then W and b of each layer.
  std::vector<ParameterBlock> parameter_blocks();
  std::vector<ConstParameterBlock> parameter_blocks() const;
  std::size_t parameter_count() const noexcept;

  friend bool operator==(const DainModel&, const DainModel&) = default;

 private:
  EmbeddingTable users_;
  EmbeddingTable items_;
  std::vector<MlpLayer> layers_;
  ContextSpec context_;
};

/// Everything backward needs from one forward pass.
struct PredictionTrace {
  std::size_t user = 0;
  std::size_t item = 0;
  std::optional<Context> context;
  std::vector<numerics::Vector> inputs;          // inputs[l] feeds layer l
  std::vector<numerics::Vector> pre_activations;  // W·x + b of layer l
  double logit = 0.0;
  double score = 0.0;  // sigmoid(logit)
};

struct DainGradients {
  std::vector<numerics::Matrix> weights;
  std::vector<numerics::Vector> biases;
  RowGradients users;
  RowGradients items;

  static DainGradients zeros_like(const DainModel& model);
  /// Zeroes dense parts and drops all sparse rows, keeping allocations.
  void clear();
  /// Same order as DainModel::parameter_blocks().
  std::vector<GradientBlock> blocks() const;
};

PredictionTrace forward(const DainModel& model, std::size_t user, std::size_t item,
                        std::optional<Context> ctx);

DainGradients backward(const DainModel& model, const PredictionTrace& trace, std::size_t user,
                       std::size_t item, std::optional<Context> ctx, double dl_dy);

/// Adds dl_dy-weighted gradients of this trace into acc.
void backward_into(const DainModel& model, const PredictionTrace& trace, double dl_dy,
                   DainGradients& acc);

/// Scores for each item, bitwise equal to forward(...).score. All ids are
/// validated before any computation.
std::vector<double> predict_batch(const DainModel& model, std::size_t user,
                                  std::span<const std::size_t> items, std::optional<Context> ctx);

}  // namespace dain::model
