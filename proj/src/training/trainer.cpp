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

#include "dainrec/training/trainer.hpp"

#include <chrono>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "dainrec/training/loss.hpp"

namespace dain::training {
namespace {

// Per-model hooks used by the shared epoch loop.
struct DainOps {
  model::DainModel& m;
  model::DainGradients grads = model::DainGradients::zeros_like(m);

  double step_example(const data::Interaction& x, std::size_t batch_n) {
    std::optional<model::Context> ctx;
    if (m.context().enabled) ctx = model::Context{x.hour, x.weekday};
    const model::PredictionTrace trace = model::forward(m, x.user, x.item, ctx);
    model::backward_into(m, trace, mse_grad(trace.score, x.target, batch_n), grads);
    return trace.score;
  }
};

struct MfOps {
  model::MfModel& m;
  model::MfGradients grads{};

  double step_example(const data::Interaction& x, std::size_t batch_n) {
    const double score = model::mf_forward(m, x.user, x.item);
    model::mf_backward_into(m, x.user, x.item, score, mse_grad(score, x.target, batch_n), grads);
    return score;
  }
};

template <typename Ops>
EpochStats run_epoch(Ops ops, const data::Dataset& train, AdamState& state, const TrainConfig& cfg,
                     numerics::SeededRng& rng) {
  cfg.validate();
  if (train.interactions.empty()) throw std::invalid_argument("train_epoch: empty dataset");
  if (train.num_users != ops.m.num_users() || train.num_items != ops.m.num_items()) {
    throw std::invalid_argument("train_epoch: dataset id space does not match the model");
  }
  const auto started = std::chrono::steady_clock::now();
  std::vector<std::size_t> order(train.interactions.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (cfg.shuffle) rng.shuffle(std::span<std::size_t>(order));

  double loss_sum = 0.0;
  for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
    const std::size_t n = std::min(cfg.batch_size, order.size() - start);
    ops.grads.clear();
    for (std::size_t j = start; j < start + n; ++j) {
      const data::Interaction& x = train.interactions[order[j]];
      const double score = ops.step_example(x, n);
      const double err = score - x.target;
      loss_sum += err * err;
    }
    adam_step(ops.m, ops.grads, state, cfg);
  }

  EpochStats stats;
  stats.examples_seen = order.size();
  stats.mean_train_loss = loss_sum / static_cast<double>(order.size());
  stats.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return stats;
}

template <typename Model>
FitResult fit_impl(Model& m, const data::Dataset& train, const TrainConfig& cfg) {
  cfg.validate();
  AdamState state = AdamState::for_model(m);
  numerics::SeededRng rng(cfg.seed, kShuffleStream);
  FitResult result;
  for (std::size_t e = 0; e < cfg.epochs; ++e) {
    EpochStats s = train_epoch(m, train, state, cfg, rng);
    s.epoch_index = e + 1;
    result.epochs.push_back(s);
  }
  return result;
}

}  // namespace

EpochStats train_epoch(model::DainModel& m, const data::Dataset& train, AdamState& state,
                       const TrainConfig& cfg, numerics::SeededRng& rng) {
  return run_epoch(DainOps{m}, train, state, cfg, rng);
}

EpochStats train_epoch(model::MfModel& m, const data::Dataset& train, AdamState& state,
                       const TrainConfig& cfg, numerics::SeededRng& rng) {
  return run_epoch(MfOps{m}, train, state, cfg, rng);
}

std::vector<double> FitResult::loss_trace() const {
  std::vector<double> out;
  for (const auto& e : epochs) out.push_back(e.mean_train_loss);
  return out;
}

FitResult fit(model::DainModel& m, const data::Dataset& train, const TrainConfig& cfg) {
  return fit_impl(m, train, cfg);
}

FitResult fit(model::MfModel& m, const data::Dataset& train, const TrainConfig& cfg) {
  return fit_impl(m, train, cfg);
}

}  // namespace dain::training
