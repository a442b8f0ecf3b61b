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
#include <optional>

#include "dainrec/model/context.hpp"
#include "dainrec/model/dain.hpp"
#include "dainrec/model/mf.hpp"

namespace dain::training {

struct GradCheckExample {
  std::size_t user = 0;
  std::size_t item = 0;
  std::optional<model::Context> context;
  double target = 0.0;
};

struct GradCheckOptions {
  /// Multiplies the analytic gradient before comparison. Only for exercising
  /// the checker itself; 1.0 in real use.
  double analytic_scale = 1.0;
};

/// Compares the analytic gradient of (score - target)² against central
/// differences, perturbing every parameter by ±eps. Returns the largest
/// |a - b| / max(|a|, |b|, 1e-8) over all parameters.
double grad_check(const model::DainModel& m, const GradCheckExample& example, double eps,
                  const GradCheckOptions& options = {});
double grad_check(const model::MfModel& m, const GradCheckExample& example, double eps,
                  const GradCheckOptions& options = {});

}  // namespace dain::training
