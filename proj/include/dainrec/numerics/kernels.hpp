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

// Inner-loop kernels with interchangeable scalar and SIMD implementations.
//
// Every implementation must produce bitwise-identical results to the scalar
// reference. Reductions therefore follow one fixed order: eight interleaved
// partial sums over blocks of eight elements, folded as
//   s[l] = acc[l] + acc[l + 4]          (l = 0..3)
//   sum  = (s[0] + s[2]) + (s[1] + s[3])
// after which the remaining n % 8 products are added left to right.
// Elementwise kernels evaluate the same expression tree per element. The
// whole project is built with -ffp-contract=off so no FMA sneaks in.

#include <cstddef>
#include <string_view>

namespace dain::numerics {

struct AdamCoefficients {
  double learning_rate;
  double beta1;
  double beta2;
  double epsilon;
  double bias_correction1;  // 1 - beta1^t
  double bias_correction2;  // 1 - beta2^t
};

struct KernelTable {
  std::string_view name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  void (*relu)(const double* in, double* out, std::size_t n);
  // out[i] = pre[i] > 0 ? upstream[i] : 0
  void (*relu_backward)(const double* pre, const double* upstream, double* out, std::size_t n);
  void (*adam_update)(double* param, double* m, double* v, const double* grad, std::size_t n,
                      const AdamCoefficients& c);
};

const KernelTable& scalar_kernels() noexcept;

/// AVX2 table, or nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2_kernels() noexcept;

/// Kernel table used by all higher-level operations. Chosen on first use:
/// AVX2 when available, unless DAINREC_KERNELS=scalar is set in the environment.
const KernelTable& kernels() noexcept;

/// Overrides the active table ("scalar" or "avx2"). Returns false if unavailable.
bool select_kernels(std::string_view name) noexcept;

}  // namespace dain::numerics
