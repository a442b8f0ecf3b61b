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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dainrec/data/parse.hpp"
#include "dainrec/numerics/rng.hpp"

namespace dain::data {

/// Bijection between raw string ids and dense indices 0..size()-1, assigned
/// in first-appearance order.
class IdMap {
 public:
  /// Index of raw, inserting it if unseen.
  std::size_t intern(const std::string& raw);
  std::optional<std::size_t> find(std::string_view raw) const;
  const std::string& raw(std::size_t index) const { return reverse_.at(index); }
  std::size_t size() const noexcept { return reverse_.size(); }
  const std::vector<std::string>& raw_ids() const noexcept { return reverse_; }

  static IdMap from_raw_ids(std::vector<std::string> raw_ids);

  friend bool operator==(const IdMap& a, const IdMap& b) { return a.reverse_ == b.reverse_; }

 private:
  std::unordered_map<std::string, std::size_t> forward_;
  std::vector<std::string> reverse_;
};

struct Interaction {
  std::size_t user = 0;
  std::size_t item = 0;
  double target = 0.0;  // normalized rating in [0, 1]
  std::int64_t timestamp = 0;
  std::uint8_t hour = 0;
  std::uint8_t weekday = 0;

  friend bool operator==(const Interaction&, const Interaction&) = default;
};

struct Dataset {
  std::vector<Interaction> interactions;
  std::size_t num_users = 0;
  std::size_t num_items = 0;
  double rating_min = 0.0;
  double rating_max = 0.0;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

struct IndexedDataset {
  Dataset dataset;
  IdMap users;
  IdMap items;
};

/// Dense ids by first appearance. A repeated (user, item) pair keeps the
/// record with the latest timestamp, the later one in file order on ties, at
/// the position of the pair's first occurrence. Ratings are min-max
/// normalized over the retained records; a constant rating maps to 1.0.
IndexedDataset build_dataset(const InteractionLog& log);

struct DatasetStats {
  std::size_t users = 0;
  std::size_t items = 0;
  std::size_t interactions = 0;
  double sparsity_percent = 0.0;  // 100 · interactions / (users · items)
};

DatasetStats stats(const Dataset& ds);
double sparsity_percent(std::size_t users, std::size_t items, std::size_t interactions);

/// `users=<n> items=<m> interactions=<t> sparsity=<p>%` with p to two decimals.
std::string format_stats(const DatasetStats& s);

/// Records of `count` distinct users drawn uniformly without replacement
/// (all users when count >= number of users), in original log order.
InteractionLog sample_users(const InteractionLog& log, std::size_t count, numerics::SeededRng& rng);

}  // namespace dain::data
