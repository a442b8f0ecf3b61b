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

#include "dainrec/model/dain.hpp"
#include "dainrec/model/gradients.hpp"
#include "dainrec/model/mf.hpp"
#include "dainrec/numerics/matrix.hpp"

namespace dain::training {

struct TrainConfig {
  double learning_rate = 0.001;
  std::size_t batch_size = 256;
  std::size_t epochs = 30;
  std::uint64_t seed = 42;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;
  bool shuffle = true;
  double weight_decay = 0.0;  // L2 added to touched parameters' gradients

  void validate() const;
};

/// First and second moments for one parameter block.
struct Moments {
  numerics::Vector first;
  numerics::Vector second;
};

/// Adam moments mirroring a model's parameter_blocks(). Embedding rows are
/// updated lazily: a row's moments only move on steps where the row has a
/// gradient entry, while the bias correction uses the global step count.
struct AdamState {
  std::vector<Moments> blocks;
  std::uint64_t step_count = 0;

  static AdamState for_model(const model::DainModel& m);
  static AdamState for_model(const model::MfModel& m);
};

/// Generic step over matching parameter/gradient block lists. Throws
/// std::invalid_argument on any shape mismatch, before touching parameters.
void adam_step(std::span<const model::ParameterBlock> params,
               std::span<const model::GradientBlock> grads, AdamState& state,
               const TrainConfig& cfg);

void adam_step(model::DainModel& m, const model::DainGradients& grads, AdamState& state,
               const TrainConfig& cfg);
void adam_step(model::MfModel& m, const model::MfGradients& grads, AdamState& state,
               const TrainConfig& cfg);

}  // namespace dain::training
