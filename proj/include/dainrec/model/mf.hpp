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
#include <span>
#include <vector>

#include "dainrec/model/embedding.hpp"
#include "dainrec/model/gradients.hpp"
#include "dainrec/numerics/matrix.hpp"

namespace dain::model {

/// Biased matrix factorization:
///   ŷ = sigmoid(global_bias + user_bias[u] + item_bias[i] + p_u · q_i)
struct MfModel {
  EmbeddingTable user_table;
  EmbeddingTable item_table;
  numerics::Vector user_bias;
  numerics::Vector item_bias;
  double global_bias = 0.0;

  std::size_t num_users() const noexcept { return user_table.num_rows(); }
  std::size_t num_items() const noexcept { return item_table.num_rows(); }
  std::size_t embedding_dim() const noexcept { return user_table.dim(); }

  void validate() const;
  std::uint64_t arch_fingerprint() const noexcept;

  /// Order: user table, item table, user bias, item bias, global bias.
  std::vector<ParameterBlock> parameter_blocks();
  std::vector<ConstParameterBlock> parameter_blocks() const;
  std::size_t parameter_count() const noexcept;

  friend bool operator==(const MfModel&, const MfModel&) = default;
};

struct MfGradients {
  RowGradients users;
  RowGradients items;
  RowGradients user_bias;  // length-1 rows
  RowGradients item_bias;  // length-1 rows
  double global_bias = 0.0;

  void clear();
  std::vector<GradientBlock> blocks() const;
};

double mf_forward(const MfModel& model, std::size_t user, std::size_t item);

MfGradients mf_backward(const MfModel& model, std::size_t user, std::size_t item, double dl_dy);
void mf_backward_into(const MfModel& model, std::size_t user, std::size_t item, double score,
                      double dl_dy, MfGradients& acc);

std::vector<double> mf_predict_batch(const MfModel& model, std::size_t user,
                                     std::span<const std::size_t> items);

}  // namespace dain::model
