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

#include "dainrec/numerics/matrix.hpp"
#include "dainrec/numerics/rng.hpp"

namespace dain::numerics {

/// m · v. Throws std::invalid_argument on shape mismatch.
Vector matvec(const Matrix& m, std::span<const double> v);
void matvec_into(const Matrix& m, std::span<const double> v, std::span<double> out);

/// out += mᵀ · v, accumulated row by row.
void add_transposed_matvec(const Matrix& m, std::span<const double> v, std::span<double> out);

double dot(std::span<const double> a, std::span<const double> b);

/// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);

Vector relu(std::span<const double> v);

/// Passes upstream through where the pre-activation is strictly positive.
/// The subgradient at exactly zero is taken as 0.
Vector relu_backward(std::span<const double> pre, std::span<const double> upstream);

/// Logistic function, evaluated on the branch that cannot overflow.
double sigmoid(double x) noexcept;

/// fan_out × fan_in matrix with entries uniform on [-b, b], b = sqrt(6 / (fan_in + fan_out)).
Matrix glorot_uniform(SeededRng& rng, std::size_t fan_in, std::size_t fan_out);

}  // namespace dain::numerics
