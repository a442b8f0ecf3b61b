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

// Compiled with -mavx2 and only entered after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "dainrec/numerics/kernels.hpp"

namespace dain::numerics {
namespace {

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d lo = _mm256_setzero_pd();  // lanes 0..3
  __m256d hi = _mm256_setzero_pd();  // lanes 4..7
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    lo = _mm256_add_pd(lo, _mm256_mul_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j)));
    hi = _mm256_add_pd(hi, _mm256_mul_pd(_mm256_loadu_pd(a + j + 4), _mm256_loadu_pd(b + j + 4)));
  }
  const __m256d s = _mm256_add_pd(lo, hi);
  // (s0 + s2), (s1 + s3)
  const __m128d t = _mm_add_pd(_mm256_castpd256_pd128(s), _mm256_extractf128_pd(s, 1));
  double sum = _mm_cvtsd_f64(t) + _mm_cvtsd_f64(_mm_unpackhi_pd(t, t));
  for (; j < n; ++j) sum = sum + a[j] * b[j];
  return sum;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + j));
    _mm256_storeu_pd(y + j, _mm256_add_pd(_mm256_loadu_pd(y + j), prod));
  }
  for (; j < n; ++j) y[j] = y[j] + alpha * x[j];
}

void relu_avx2(const double* in, double* out, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d x = _mm256_loadu_pd(in + j);
    const __m256d keep = _mm256_cmp_pd(x, zero, _CMP_GT_OQ);
    _mm256_storeu_pd(out + j, _mm256_and_pd(keep, x));
  }
  for (; j < n; ++j) out[j] = in[j] > 0.0 ? in[j] : 0.0;
}

void relu_backward_avx2(const double* pre, const double* upstream, double* out, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d keep = _mm256_cmp_pd(_mm256_loadu_pd(pre + j), zero, _CMP_GT_OQ);
    _mm256_storeu_pd(out + j, _mm256_and_pd(keep, _mm256_loadu_pd(upstream + j)));
  }
  for (; j < n; ++j) out[j] = pre[j] > 0.0 ? upstream[j] : 0.0;
}

void adam_update_avx2(double* param, double* m, double* v, const double* grad, std::size_t n,
                      const AdamCoefficients& c) {
  const double one_minus_b1 = 1.0 - c.beta1;
  const double one_minus_b2 = 1.0 - c.beta2;
  const __m256d b1 = _mm256_set1_pd(c.beta1);
  const __m256d b2 = _mm256_set1_pd(c.beta2);
  const __m256d omb1 = _mm256_set1_pd(one_minus_b1);
  const __m256d omb2 = _mm256_set1_pd(one_minus_b2);
  const __m256d bc1 = _mm256_set1_pd(c.bias_correction1);
  const __m256d bc2 = _mm256_set1_pd(c.bias_correction2);
  const __m256d lr = _mm256_set1_pd(c.learning_rate);
  const __m256d eps = _mm256_set1_pd(c.epsilon);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d g = _mm256_loadu_pd(grad + j);
    const __m256d mj = _mm256_add_pd(_mm256_mul_pd(b1, _mm256_loadu_pd(m + j)), _mm256_mul_pd(omb1, g));
    const __m256d vj = _mm256_add_pd(_mm256_mul_pd(b2, _mm256_loadu_pd(v + j)),
                                     _mm256_mul_pd(omb2, _mm256_mul_pd(g, g)));
    _mm256_storeu_pd(m + j, mj);
    _mm256_storeu_pd(v + j, vj);
    const __m256d m_hat = _mm256_div_pd(mj, bc1);
    const __m256d v_hat = _mm256_div_pd(vj, bc2);
    const __m256d step =
        _mm256_div_pd(_mm256_mul_pd(lr, m_hat), _mm256_add_pd(_mm256_sqrt_pd(v_hat), eps));
    _mm256_storeu_pd(param + j, _mm256_sub_pd(_mm256_loadu_pd(param + j), step));
  }
  for (; j < n; ++j) {
    const double g = grad[j];
    m[j] = c.beta1 * m[j] + one_minus_b1 * g;
    v[j] = c.beta2 * v[j] + one_minus_b2 * (g * g);
    const double m_hat = m[j] / c.bias_correction1;
    const double v_hat = v[j] / c.bias_correction2;
    param[j] = param[j] - c.learning_rate * m_hat / (std::sqrt(v_hat) + c.epsilon);
  }
}

}  // namespace

const KernelTable& avx2_kernel_table() noexcept {
  static const KernelTable table{"avx2",    &dot_avx2,           &axpy_avx2,
                                 &relu_avx2, &relu_backward_avx2, &adam_update_avx2};
  return table;
}

}  // namespace dain::numerics
