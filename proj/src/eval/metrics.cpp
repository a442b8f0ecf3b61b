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

#include "dainrec/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dain::eval {

RankedList RankedList::from_scores(std::span<const std::size_t> items,
                                   std::span<const double> scores) {
  if (items.size() != scores.size()) {
    throw std::invalid_argument("RankedList: items and scores differ in length");
  }
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return items[a] < items[b];
  });
  RankedList out;
  out.items.reserve(items.size());
  for (std::size_t j : order) out.items.push_back(items[j]);
  std::vector<std::size_t> sorted = out.items;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("RankedList: duplicate candidate items");
  }
  return out;
}

namespace {

std::vector<std::size_t> as_set(std::span<const std::size_t> relevant, std::size_t k) {
  if (relevant.empty()) throw std::invalid_argument("ranking metric: empty relevant set");
  if (k == 0) throw std::invalid_argument("ranking metric: k must be >= 1");
  std::vector<std::size_t> set(relevant.begin(), relevant.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

bool contains(const std::vector<std::size_t>& set, std::size_t item) {
  return std::binary_search(set.begin(), set.end(), item);
}

}  // namespace

double hit_rate_at_k(const RankedList& ranked, std::span<const std::size_t> relevant, std::size_t k) {
  const auto rel = as_set(relevant, k);
  const std::size_t cut = std::min(k, ranked.items.size());
  for (std::size_t j = 0; j < cut; ++j) {
    if (contains(rel, ranked.items[j])) return 1.0;
  }
  return 0.0;
}

double ndcg_at_k(const RankedList& ranked, std::span<const std::size_t> relevant, std::size_t k) {
  const auto rel = as_set(relevant, k);
  const std::size_t cut = std::min(k, ranked.items.size());
  double dcg = 0.0;
  for (std::size_t j = 0; j < cut; ++j) {
    if (contains(rel, ranked.items[j])) dcg += 1.0 / std::log2(static_cast<double>(j) + 2.0);
  }
  double idcg = 0.0;
  const std::size_t ideal = std::min(rel.size(), k);
  for (std::size_t j = 0; j < ideal; ++j) idcg += 1.0 / std::log2(static_cast<double>(j) + 2.0);
  return dcg / idcg;
}

double map_at_k(const RankedList& ranked, std::span<const std::size_t> relevant, std::size_t k) {
  const auto rel = as_set(relevant, k);
  const std::size_t cut = std::min(k, ranked.items.size());
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t j = 0; j < cut; ++j) {
    if (contains(rel, ranked.items[j])) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(j + 1);
    }
  }
  return sum / static_cast<double>(std::min(rel.size(), k));
}

}  // namespace dain::eval
