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
#include <span>

namespace dain::training {

/// Mean of squared differences. Throws std::invalid_argument on empty or
/// mismatched inputs.
double mse_loss(std::span<const double> preds, std::span<const double> targets);

/// d/d pred of the batch-mean squared error: 2 (pred - target) / n.
double mse_grad(double pred, double target, std::size_t n);

}  // namespace dain::training
