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

#include "dainrec/training/grad_check.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dainrec/training/loss.hpp"

namespace dain::training {
namespace {

double relative_error(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-8});
}

// loss(model) evaluates the single-example squared error of the current parameters.
template <typename Model, typename Gradients, typename LossFn>
double compare(Model& m, const Gradients& analytic, LossFn&& loss, double eps, double scale) {
  if (!(eps > 0.0)) throw std::invalid_argument("grad_check: eps must be > 0");
  const auto params = m.parameter_blocks();
  const auto grads = analytic.blocks();
  double worst = 0.0;
  for (std::size_t b = 0; b < params.size(); ++b) {
    const auto& p = params[b];
    for (std::size_t j = 0; j < p.values.size(); ++j) {
      double a = 0.0;
      if (p.sparse_rows) {
        const auto it = grads[b].rows->find(j / p.row_dim);
        if (it != grads[b].rows->end()) a = it->second[j % p.row_dim];
      } else {
        a = grads[b].dense[j];
      }
      a *= scale;
      const double saved = p.values[j];
      p.values[j] = saved + eps;
      const double up = loss(m);
      p.values[j] = saved - eps;
      const double down = loss(m);
      p.values[j] = saved;
      worst = std::max(worst, relative_error(a, (up - down) / (2.0 * eps)));
    }
  }
  return worst;
}

}  // namespace

double grad_check(const model::DainModel& m, const GradCheckExample& ex, double eps,
                  const GradCheckOptions& options) {
  model::DainModel work = m;
  const auto trace = model::forward(work, ex.user, ex.item, ex.context);
  const auto analytic = model::backward(work, trace, ex.user, ex.item, ex.context,
                                        mse_grad(trace.score, ex.target, 1));
  auto loss = [&](const model::DainModel& mm) {
    const double d = model::forward(mm, ex.user, ex.item, ex.context).score - ex.target;
    return d * d;
  };
  return compare(work, analytic, loss, eps, options.analytic_scale);
}

double grad_check(const model::MfModel& m, const GradCheckExample& ex, double eps,
                  const GradCheckOptions& options) {
  model::MfModel work = m;
  const double score = model::mf_forward(work, ex.user, ex.item);
  const auto analytic =
      model::mf_backward(work, ex.user, ex.item, mse_grad(score, ex.target, 1));
  auto loss = [&](const model::MfModel& mm) {
    const double d = model::mf_forward(mm, ex.user, ex.item) - ex.target;
    return d * d;
  };
  return compare(work, analytic, loss, eps, options.analytic_scale);
}

}  // namespace dain::training
