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

#include "dainrec/model/embedding.hpp"

#include <stdexcept>
#include <string>

namespace dain::model {

void EmbeddingTable::check(std::size_t id) const {
  if (id >= table_.rows()) {
    throw std::out_of_range("embedding lookup: id " + std::to_string(id) +
                            " out of range for table with " + std::to_string(table_.rows()) +
                            " rows");
  }
}

numerics::Vector EmbeddingTable::lookup(std::size_t id) const {
  check(id);
  const auto r = table_.row(id);
  return {r.begin(), r.end()};
}

std::span<const double> EmbeddingTable::row(std::size_t id) const {
  check(id);
  return table_.row(id);
}

std::span<double> EmbeddingTable::row(std::size_t id) {
  check(id);
  return table_.row(id);
}

}  // namespace dain::model
