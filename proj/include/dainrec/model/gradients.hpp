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
#include <map>
#include <span>
#include <vector>

#include "dainrec/numerics/matrix.hpp"

namespace dain::model {

/// Sparse per-row gradient of an embedding-like table; holds only touched rows.
using RowGradients = std::map<std::size_t, numerics::Vector>;

/// A contiguous slice of model parameters. Sparse blocks are tables updated
/// row by row (row_dim entries per row); dense blocks are updated as a whole.
struct ParameterBlock {
  std::span<double> values;
  bool sparse_rows = false;
  std::size_t row_dim = 0;
};

struct ConstParameterBlock {
  std::span<const double> values;
  bool sparse_rows = false;
  std::size_t row_dim = 0;
};

/// Gradient for one ParameterBlock: `dense` for dense blocks, `rows` for sparse ones.
struct GradientBlock {
  std::span<const double> dense;
  const RowGradients* rows = nullptr;
};

void accumulate_rows(RowGradients& into, std::size_t id, std::span<const double> grad);

}  // namespace dain::model
