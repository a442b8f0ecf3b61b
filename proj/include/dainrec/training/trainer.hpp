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
#include <vector>

#include "dainrec/data/dataset.hpp"
#include "dainrec/model/dain.hpp"
#include "dainrec/model/mf.hpp"
#include "dainrec/numerics/rng.hpp"
#include "dainrec/training/adam.hpp"

namespace dain::training {

struct EpochStats {
  std::size_t epoch_index = 0;
  double mean_train_loss = 0.0;  // mean squared error over the epoch, measured before each step
  std::size_t examples_seen = 0;
  double wall_time_seconds = 0.0;
};

/// One pass over `train` in seeded-shuffle order (dataset order when
/// cfg.shuffle is off). Each batch of cfg.batch_size examples (the last one
/// may be shorter) contributes the gradient of its mean squared error and
/// one Adam step. Runs single-threaded; the result depends only on
/// (model, state, train, cfg, rng).
EpochStats train_epoch(model::DainModel& m, const data::Dataset& train, AdamState& state,
                       const TrainConfig& cfg, numerics::SeededRng& rng);
EpochStats train_epoch(model::MfModel& m, const data::Dataset& train, AdamState& state,
                       const TrainConfig& cfg, numerics::SeededRng& rng);

struct FitResult {
  std::vector<EpochStats> epochs;
  std::vector<double> loss_trace() const;
};

/// cfg.epochs epochs from a fresh AdamState; the shuffle stream is
/// SeededRng(cfg.seed, kShuffleStream).
inline constexpr std::uint64_t kShuffleStream = 2;

FitResult fit(model::DainModel& m, const data::Dataset& train, const TrainConfig& cfg);
FitResult fit(model::MfModel& m, const data::Dataset& train, const TrainConfig& cfg);

}  // namespace dain::training
