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

#include "dainrec/numerics/ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dainrec/numerics/kernels.hpp"

namespace dain::numerics {
namespace {

[[noreturn]] void mismatch(const char* what, std::size_t a, std::size_t b) {
  throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                              " vs " + std::to_string(b) + ")");
}

}  // namespace

Vector matvec(const Matrix& m, std::span<const double> v) {
  Vector out(m.rows());
  matvec_into(m, v, out);
  return out;
}

void matvec_into(const Matrix& m, std::span<const double> v, std::span<double> out) {
  if (m.cols() != v.size()) mismatch("matvec: matrix cols vs vector length", m.cols(), v.size());
  if (out.size() != m.rows()) mismatch("matvec: matrix rows vs output length", m.rows(), out.size());
  const KernelTable& k = kernels();
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = k.dot(m.row(r).data(), v.data(), v.size());
}

void add_transposed_matvec(const Matrix& m, std::span<const double> v, std::span<double> out) {
  if (m.rows() != v.size()) mismatch("transposed matvec: matrix rows vs vector length", m.rows(), v.size());
  if (out.size() != m.cols()) mismatch("transposed matvec: matrix cols vs output length", m.cols(), out.size());
  const KernelTable& k = kernels();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r] != 0.0) k.axpy(v[r], m.row(r).data(), out.data(), out.size());
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) mismatch("dot", a.size(), b.size());
  return kernels().dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  if (x.size() != y.size()) mismatch("axpy", x.size(), y.size());
  kernels().axpy(alpha, x.data(), y.data(), x.size());
}

Vector relu(std::span<const double> v) {
  Vector out(v.size());
  kernels().relu(v.data(), out.data(), v.size());
  return out;
}

Vector relu_backward(std::span<const double> pre, std::span<const double> upstream) {
  if (pre.size() != upstream.size()) mismatch("relu_backward", pre.size(), upstream.size());
  Vector out(pre.size());
  kernels().relu_backward(pre.data(), upstream.data(), out.data(), pre.size());
  return out;
}

double sigmoid(double x) noexcept {
  // Saturated results are pulled back inside the open interval (0, 1).
  constexpr double kBelowOne = 1.0 - 0x1.0p-53;
  constexpr double kAboveZero = std::numeric_limits<double>::min();
  double y;
  if (x >= 0.0) {
    y = 1.0 / (1.0 + std::exp(-x));
  } else {
    const double e = std::exp(x);
    y = e / (1.0 + e);
  }
  return std::clamp(y, kAboveZero, kBelowOne);
}

Matrix glorot_uniform(SeededRng& rng, std::size_t fan_in, std::size_t fan_out) {
  if (fan_in == 0 || fan_out == 0) {
    throw std::invalid_argument("glorot_uniform: fan_in and fan_out must be >= 1 (got " +
                                std::to_string(fan_in) + ", " + std::to_string(fan_out) + ")");
  }
  const double bound = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  Matrix m(fan_out, fan_in);
  for (double& x : m.values()) x = rng.uniform(-bound, bound);
  return m;
}

}  // namespace dain::numerics
