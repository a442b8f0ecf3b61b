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
#include <vector>

namespace dain::eval {

/// Candidate items ordered best first.
struct RankedList {
  std::vector<std::size_t> items;

  /// Sorts by score descending, breaking ties by ascending item index.
  /// Throws std::invalid_argument on size mismatch or duplicate items.
  static RankedList from_scores(std::span<const std::size_t> items, std::span<const double> scores);
};

// Binary relevance; `relevant` is treated as a set. All three throw
// std::invalid_argument when relevant is empty or k == 0.

/// 1 if any relevant item is in the first k positions, else 0.
double hit_rate_at_k(const RankedList& ranked, std::span<const std::size_t> relevant, std::size_t k);

/// DCG@k / IDCG@k with gain 1/log2(rank + 1), ranks starting at 1.
double ndcg_at_k(const RankedList& ranked, std::span<const std::size_t> relevant, std::size_t k);

/// (1 / min(|relevant|, k)) · Σ_{j ≤ k} precision@j · rel(j).
double map_at_k(const RankedList& ranked, std::span<const std::size_t> relevant, std::size_t k);

}  // namespace dain::eval
