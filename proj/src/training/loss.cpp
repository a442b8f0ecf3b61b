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

#include "dainrec/training/loss.hpp"

#include <stdexcept>
#include <string>

namespace dain::training {

double mse_loss(std::span<const double> preds, std::span<const double> targets) {
  if (preds.empty()) throw std::invalid_argument("mse_loss: empty batch");
  if (preds.size() != targets.size()) {
    throw std::invalid_argument("mse_loss: " + std::to_string(preds.size()) + " predictions vs " +
                                std::to_string(targets.size()) + " targets");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < preds.size(); ++j) {
    const double d = preds[j] - targets[j];
    sum += d * d;
  }
  return sum / static_cast<double>(preds.size());
}

double mse_grad(double pred, double target, std::size_t n) {
  if (n == 0) throw std::invalid_argument("mse_grad: n must be >= 1");
  return 2.0 * (pred - target) / static_cast<double>(n);
}

}  // namespace dain::training
