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

#include "dainrec/training/adam.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dainrec/numerics/kernels.hpp"

namespace dain::training {

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw std::invalid_argument("learning_rate must be > 0");
  }
  if (batch_size == 0) throw std::invalid_argument("batch_size must be >= 1");
  if (epochs == 0) throw std::invalid_argument("epochs must be >= 1");
  if (!(adam_beta1 >= 0.0 && adam_beta1 < 1.0) || !(adam_beta2 >= 0.0 && adam_beta2 < 1.0)) {
    throw std::invalid_argument("adam betas must lie in [0, 1)");
  }
  if (!(adam_epsilon > 0.0)) throw std::invalid_argument("adam_epsilon must be > 0");
  if (!(weight_decay >= 0.0)) throw std::invalid_argument("weight_decay must be >= 0");
}

namespace {

template <typename Blocks>
AdamState state_for(const Blocks& blocks) {
  AdamState s;
  for (const auto& b : blocks) {
    s.blocks.push_back({numerics::Vector(b.values.size(), 0.0), numerics::Vector(b.values.size(), 0.0)});
  }
  return s;
}

void check_shapes(std::span<const model::ParameterBlock> params,
                  std::span<const model::GradientBlock> grads, const AdamState& state) {
  if (params.size() != grads.size() || params.size() != state.blocks.size()) {
    throw std::invalid_argument("adam_step: " + std::to_string(params.size()) + " parameter blocks, " +
                                std::to_string(grads.size()) + " gradient blocks, " +
                                std::to_string(state.blocks.size()) + " moment blocks");
  }
  for (std::size_t b = 0; b < params.size(); ++b) {
    const auto& p = params[b];
    const auto& m = state.blocks[b];
    if (m.first.size() != p.values.size() || m.second.size() != p.values.size()) {
      throw std::invalid_argument("adam_step: moment shape mismatch in block " + std::to_string(b));
    }
    if (p.sparse_rows) {
      if (grads[b].rows == nullptr) {
        throw std::invalid_argument("adam_step: block " + std::to_string(b) + " needs row gradients");
      }
      const std::size_t rows = p.row_dim == 0 ? 0 : p.values.size() / p.row_dim;
      for (const auto& [row, g] : *grads[b].rows) {
        if (row >= rows || g.size() != p.row_dim) {
          throw std::invalid_argument("adam_step: bad gradient row " + std::to_string(row) +
                                      " in block " + std::to_string(b));
        }
      }
    } else if (grads[b].dense.size() != p.values.size()) {
      throw std::invalid_argument("adam_step: dense gradient size mismatch in block " +
                                  std::to_string(b));
    }
  }
}

// Exponentiation by squaring: plain IEEE multiplies, so no libm variance.
double int_pow(double base, std::uint64_t exp) {
  double result = 1.0;
  while (exp > 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

}  // namespace

AdamState AdamState::for_model(const model::DainModel& m) { return state_for(m.parameter_blocks()); }
AdamState AdamState::for_model(const model::MfModel& m) { return state_for(m.parameter_blocks()); }

void adam_step(std::span<const model::ParameterBlock> params,
               std::span<const model::GradientBlock> grads, AdamState& state,
               const TrainConfig& cfg) {
  check_shapes(params, grads, state);
  ++state.step_count;
  const numerics::AdamCoefficients c{cfg.learning_rate,
                                     cfg.adam_beta1,
                                     cfg.adam_beta2,
                                     cfg.adam_epsilon,
                                     1.0 - int_pow(cfg.adam_beta1, state.step_count),
                                     1.0 - int_pow(cfg.adam_beta2, state.step_count)};
  const auto& k = numerics::kernels();
  numerics::Vector decayed;
  auto update = [&](double* param, double* m1, double* m2, const double* g, std::size_t n) {
    if (cfg.weight_decay > 0.0) {
      decayed.assign(g, g + n);
      k.axpy(cfg.weight_decay, param, decayed.data(), n);
      g = decayed.data();
    }
    k.adam_update(param, m1, m2, g, n, c);
  };
  for (std::size_t b = 0; b < params.size(); ++b) {
    const auto& p = params[b];
    Moments& mom = state.blocks[b];
    if (p.sparse_rows) {
      for (const auto& [row, g] : *grads[b].rows) {
        const std::size_t off = row * p.row_dim;
        update(p.values.data() + off, mom.first.data() + off, mom.second.data() + off, g.data(),
               p.row_dim);
      }
    } else {
      update(p.values.data(), mom.first.data(), mom.second.data(), grads[b].dense.data(),
             p.values.size());
    }
  }
}

void adam_step(model::DainModel& m, const model::DainGradients& grads, AdamState& state,
               const TrainConfig& cfg) {
  const auto params = m.parameter_blocks();
  const auto g = grads.blocks();
  adam_step(params, g, state, cfg);
}

void adam_step(model::MfModel& m, const model::MfGradients& grads, AdamState& state,
               const TrainConfig& cfg) {
  const auto params = m.parameter_blocks();
  const auto g = grads.blocks();
  adam_step(params, g, state, cfg);
}

}  // namespace dain::training
