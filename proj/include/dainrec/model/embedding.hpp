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

namespace dain::model {

/// num_rows × dim lookup table (user or item latent vectors).
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(numerics::Matrix table) : table_(std::move(table)) {}
  EmbeddingTable(std::size_t num_rows, std::size_t dim) : table_(num_rows, dim) {}

  std::size_t num_rows() const noexcept { return table_.rows(); }
  std::size_t dim() const noexcept { return table_.cols(); }

  /// Copy of row id. Throws std::out_of_range for id >= num_rows().
  numerics::Vector lookup(std::size_t id) const;

  std::span<const double> row(std::size_t id) const;
  std::span<double> row(std::size_t id);

  const numerics::Matrix& table() const noexcept { return table_; }
  numerics::Matrix& table() noexcept { return table_; }

  friend bool operator==(const EmbeddingTable&, const EmbeddingTable&) = default;

 private:
  void check(std::size_t id) const;

  numerics::Matrix table_;
};

}  // namespace dain::model
