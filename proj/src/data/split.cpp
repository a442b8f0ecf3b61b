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

#include "dainrec/data/split.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace dain::data {

EvalSplit leave_one_out_split(const Dataset& ds, std::size_t negatives_per_user,
                              numerics::SeededRng& rng) {
  if (negatives_per_user == 0) throw std::invalid_argument("negatives_per_user must be >= 1");

  std::vector<std::vector<std::size_t>> by_user(ds.num_users);  // positions into interactions
  for (std::size_t pos = 0; pos < ds.interactions.size(); ++pos) {
    by_user[ds.interactions[pos].user].push_back(pos);
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> held_out(ds.num_users, kNone);
  EvalSplit split;
  std::vector<bool> seen(ds.num_items, false);
  std::vector<std::size_t> pool;
  for (std::size_t u = 0; u < ds.num_users; ++u) {
    const auto& positions = by_user[u];
    if (positions.size() < 2) continue;
    std::size_t latest = positions.front();
    for (std::size_t pos : positions) {
      const Interaction& a = ds.interactions[pos];
      const Interaction& b = ds.interactions[latest];
      if (a.timestamp > b.timestamp || (a.timestamp == b.timestamp && a.item > b.item)) latest = pos;
    }
    const std::size_t available = ds.num_items - positions.size();
    if (available < negatives_per_user) {
      ++split.users_skipped;
      continue;
    }
    for (std::size_t pos : positions) seen[ds.interactions[pos].item] = true;

    TestCase tc;
    tc.user = u;
    tc.positive = ds.interactions[latest].item;
    tc.context = {ds.interactions[latest].hour, ds.interactions[latest].weekday};
    tc.negatives.reserve(negatives_per_user);
    if (available >= 2 * negatives_per_user) {
      // Rejection sampling; `seen` doubles as the already-drawn marker.
      while (tc.negatives.size() < negatives_per_user) {
        const auto item = static_cast<std::size_t>(rng.uniform_index(ds.num_items));
        if (seen[item]) continue;
        seen[item] = true;
        tc.negatives.push_back(item);
      }
      for (std::size_t item : tc.negatives) seen[item] = false;
    } else {
      // Dense pool: partial Fisher-Yates over the explicit candidate list.
      pool.clear();
      for (std::size_t item = 0; item < ds.num_items; ++item) {
        if (!seen[item]) pool.push_back(item);
      }
      for (std::size_t j = 0; j < negatives_per_user; ++j) {
        const std::size_t pick = j + static_cast<std::size_t>(rng.uniform_index(pool.size() - j));
        std::swap(pool[j], pool[pick]);
        tc.negatives.push_back(pool[j]);
      }
    }
    for (std::size_t pos : positions) seen[ds.interactions[pos].item] = false;
    held_out[u] = latest;
    split.test.push_back(std::move(tc));
  }

  split.train.num_users = ds.num_users;
  split.train.num_items = ds.num_items;
  split.train.rating_min = ds.rating_min;
  split.train.rating_max = ds.rating_max;
  split.train.interactions.reserve(ds.interactions.size() - split.test.size());
  for (std::size_t pos = 0; pos < ds.interactions.size(); ++pos) {
    if (held_out[ds.interactions[pos].user] != pos) {
      split.train.interactions.push_back(ds.interactions[pos]);
    }
  }
  return split;
}

}  // namespace dain::data
