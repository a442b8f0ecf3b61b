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
#include <stdexcept>
#include <string>

#include "dainrec/data/split.hpp"
#include "dainrec/eval/scorers.hpp"

namespace dain::eval {

struct MetricReport {
  std::size_t k = 10;
  double map_at_k = 0.0;
  double ndcg_at_k = 0.0;
  double hr_at_k = 0.0;
  std::size_t users_evaluated = 0;
  std::size_t users_skipped = 0;

  friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

/// The scorer and the split index different user or item sets.
class IdSpaceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ranks {positive} ∪ negatives for every test case with the case's context,
/// scores HR/NDCG/AP at k against the single positive and averages them over
/// test cases in split order.
MetricReport evaluate(const Scorer& scorer, const data::EvalSplit& split, std::size_t k);

/// Flat JSON object with keys k, map, ndcg, hr, users_evaluated, users_skipped.
std::string to_json(const MetricReport& report);

}  // namespace dain::eval
