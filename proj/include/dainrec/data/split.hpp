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
#include <vector>

#include "dainrec/data/dataset.hpp"
#include "dainrec/model/context.hpp"
#include "dainrec/numerics/rng.hpp"

namespace dain::data {

/// One held-out positive with its context and sampled distractor items.
struct TestCase {
  std::size_t user = 0;
  std::size_t positive = 0;
  model::Context context;
  std::vector<std::size_t> negatives;

  friend bool operator==(const TestCase&, const TestCase&) = default;
};

struct EvalSplit {
  Dataset train;
  std::vector<TestCase> test;     // ascending user order
  std::size_t users_skipped = 0;  // too few non-interacted items for the negatives

  friend bool operator==(const EvalSplit&, const EvalSplit&) = default;
};

/// Leave-latest-one-out. For every user with at least two interactions the
/// latest one (ties: largest item index) is held out; everything else,
/// including single-interaction users, is kept for training in dataset
/// order. Negatives are drawn uniformly without replacement from items the
/// user never interacted with. A user whose pool is smaller than
/// negatives_per_user is left out of the test set and counted in
/// users_skipped; all of its interactions stay in train, so
/// |train| + |test| always equals |ds.interactions|.
EvalSplit leave_one_out_split(const Dataset& ds, std::size_t negatives_per_user,
                              numerics::SeededRng& rng);

}  // namespace dain::data
