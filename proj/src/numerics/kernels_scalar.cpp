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

#include <cmath>

#include "dainrec/numerics/kernels.hpp"

namespace dain::numerics {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    for (std::size_t l = 0; l < 8; ++l) acc[l] = acc[l] + a[j + l] * b[j + l];
  }
  const double s0 = acc[0] + acc[4];
  const double s1 = acc[1] + acc[5];
  const double s2 = acc[2] + acc[6];
  const double s3 = acc[3] + acc[7];
  double sum = (s0 + s2) + (s1 + s3);
  for (; j < n; ++j) sum = sum + a[j] * b[j];
  return sum;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) y[j] = y[j] + alpha * x[j];
}

void relu_scalar(const double* in, double* out, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) out[j] = in[j] > 0.0 ? in[j] : 0.0;
}

void relu_backward_scalar(const double* pre, const double* upstream, double* out,
                          std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) out[j] = pre[j] > 0.0 ? upstream[j] : 0.0;
}

void adam_update_scalar(double* param, double* m, double* v, const double* grad,
                        std::size_t n, const AdamCoefficients& c) {
  const double one_minus_b1 = 1.0 - c.beta1;
  const double one_minus_b2 = 1.0 - c.beta2;
  for (std::size_t j = 0; j < n; ++j) {
    const double g = grad[j];
    m[j] = c.beta1 * m[j] + one_minus_b1 * g;
    v[j] = c.beta2 * v[j] + one_minus_b2 * (g * g);
    const double m_hat = m[j] / c.bias_correction1;
    const double v_hat = v[j] / c.bias_correction2;
    param[j] = param[j] - c.learning_rate * m_hat / (std::sqrt(v_hat) + c.epsilon);
  }
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{"scalar",    &dot_scalar,           &axpy_scalar,
                                 &relu_scalar, &relu_backward_scalar, &adam_update_scalar};
  return table;
}

}  // namespace dain::numerics
