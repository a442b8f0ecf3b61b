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

// Reference computations used only by tests. None of these call into the
// library's numerics so they stay independent of the code they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace dain::testing {

inline std::vector<double> naive_matvec(const std::vector<double>& m, std::size_t rows,
                                        std::size_t cols, const std::vector<double>& v) {
  std::vector<double> out(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    long double acc = 0.0L;
    for (std::size_t j = 0; j < cols; ++j) acc += static_cast<long double>(m[i * cols + j]) * v[j];
    out[i] = static_cast<double>(acc);
  }
  return out;
}

inline double naive_dot(const std::vector<double>& a, const std::vector<double>& b) {
  long double acc = 0.0L;
  for (std::size_t j = 0; j < a.size(); ++j) acc += static_cast<long double>(a[j]) * b[j];
  return static_cast<double>(acc);
}

inline double naive_sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Ranking-metric oracles: literal transcriptions of the definitions, with
// explicit relevance vectors instead of set lookups.
inline std::vector<int> relevance_vector(const std::vector<std::size_t>& ranked,
                                         const std::vector<std::size_t>& relevant) {
  std::vector<int> rel(ranked.size(), 0);
  for (std::size_t j = 0; j < ranked.size(); ++j) {
    for (std::size_t r : relevant) {
      if (ranked[j] == r) rel[j] = 1;
    }
  }
  return rel;
}

inline std::size_t distinct_count(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

inline double oracle_hr(const std::vector<std::size_t>& ranked,
                        const std::vector<std::size_t>& relevant, std::size_t k) {
  const auto rel = relevance_vector(ranked, relevant);
  int hits = 0;
  for (std::size_t j = 0; j < ranked.size(); ++j) {
    if (j < k) hits += rel[j];
  }
  return hits > 0 ? 1.0 : 0.0;
}

inline double oracle_ndcg(const std::vector<std::size_t>& ranked,
                          const std::vector<std::size_t>& relevant, std::size_t k) {
  const auto rel = relevance_vector(ranked, relevant);
  double dcg = 0.0;
  for (std::size_t rank = 1; rank <= std::min(k, ranked.size()); ++rank) {
    dcg += rel[rank - 1] / (std::log(rank + 1.0) / std::log(2.0));
  }
  // Ideal list: all relevant items first.
  double idcg = 0.0;
  const std::size_t n_rel = distinct_count(relevant);
  for (std::size_t rank = 1; rank <= std::min(k, n_rel); ++rank) {
    idcg += 1.0 / (std::log(rank + 1.0) / std::log(2.0));
  }
  return dcg / idcg;
}

inline double oracle_ap(const std::vector<std::size_t>& ranked,
                        const std::vector<std::size_t>& relevant, std::size_t k) {
  const auto rel = relevance_vector(ranked, relevant);
  double total = 0.0;
  for (std::size_t j = 1; j <= std::min(k, ranked.size()); ++j) {
    if (rel[j - 1] == 0) continue;
    int hits_to_j = 0;
    for (std::size_t t = 0; t < j; ++t) hits_to_j += rel[t];
    total += static_cast<double>(hits_to_j) / static_cast<double>(j);
  }
  return total / static_cast<double>(std::min(distinct_count(relevant), k));
}

}  // namespace dain::testing
