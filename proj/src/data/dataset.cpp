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

#include "dainrec/data/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <unordered_set>

#include "dainrec/data/calendar.hpp"
#include "dainrec/data/errors.hpp"

namespace dain::data {

std::size_t IdMap::intern(const std::string& raw) {
  auto [it, inserted] = forward_.try_emplace(raw, reverse_.size());
  if (inserted) reverse_.push_back(raw);
  return it->second;
}

std::optional<std::size_t> IdMap::find(std::string_view raw) const {
  const auto it = forward_.find(std::string(raw));
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

IdMap IdMap::from_raw_ids(std::vector<std::string> raw_ids) {
  IdMap map;
  for (auto& raw : raw_ids) {
    if (map.find(raw)) throw DataError("duplicate raw id '" + raw + "' in id map");
    map.intern(raw);
  }
  return map;
}

namespace {

struct PairHash {
  std::size_t operator()(std::uint64_t key) const noexcept {
    key ^= key >> 33;
    key *= 0xFF51AFD7ED558CCDULL;
    key ^= key >> 33;
    return static_cast<std::size_t>(key);
  }
};

}  // namespace

IndexedDataset build_dataset(const InteractionLog& log) {
  if (log.records.empty()) throw DataError("cannot build a dataset from an empty log");
  IndexedDataset out;
  struct Kept {
    std::size_t user, item;
    double rating;
    std::int64_t ts;
  };
  std::vector<Kept> kept;
  std::unordered_map<std::uint64_t, std::size_t, PairHash> position;
  for (const auto& rec : log.records) {
    const std::size_t u = out.users.intern(rec.raw_user);
    const std::size_t i = out.items.intern(rec.raw_item);
    const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(i);
    auto [it, inserted] = position.try_emplace(key, kept.size());
    if (inserted) {
      kept.push_back({u, i, rec.rating, rec.timestamp});
    } else if (rec.timestamp >= kept[it->second].ts) {
      kept[it->second].rating = rec.rating;
      kept[it->second].ts = rec.timestamp;
    }
  }

  Dataset& ds = out.dataset;
  ds.num_users = out.users.size();
  ds.num_items = out.items.size();
  const auto [lo, hi] = std::minmax_element(kept.begin(), kept.end(), [](const Kept& a, const Kept& b) {
    return a.rating < b.rating;
  });
  ds.rating_min = lo->rating;
  ds.rating_max = hi->rating;
  const double range = ds.rating_max - ds.rating_min;
  ds.interactions.reserve(kept.size());
  for (const auto& k : kept) {
    const model::Context ctx = context_from_timestamp(k.ts);
    const double y = range > 0.0 ? (k.rating - ds.rating_min) / range : 1.0;
    ds.interactions.push_back({k.user, k.item, y, k.ts, ctx.hour, ctx.weekday});
  }
  return out;
}

double sparsity_percent(std::size_t users, std::size_t items, std::size_t interactions) {
  return 100.0 * static_cast<double>(interactions) /
         (static_cast<double>(users) * static_cast<double>(items));
}

DatasetStats stats(const Dataset& ds) {
  DatasetStats s;
  s.users = ds.num_users;
  s.items = ds.num_items;
  s.interactions = ds.interactions.size();
  s.sparsity_percent = (s.users == 0 || s.items == 0)
                           ? 0.0
                           : sparsity_percent(s.users, s.items, s.interactions);
  return s;
}

std::string format_stats(const DatasetStats& s) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "users=%zu items=%zu interactions=%zu sparsity=%.2f%%", s.users,
                s.items, s.interactions, s.sparsity_percent);
  return buf;
}

InteractionLog sample_users(const InteractionLog& log, std::size_t count, numerics::SeededRng& rng) {
  IdMap users;
  for (const auto& rec : log.records) users.intern(rec.raw_user);
  std::vector<std::size_t> order(users.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(order));
  order.resize(std::min(count, order.size()));
  std::vector<bool> chosen(users.size(), false);
  for (std::size_t u : order) chosen[u] = true;
  InteractionLog out;
  for (const auto& rec : log.records) {
    if (chosen[*users.find(rec.raw_user)]) out.records.push_back(rec);
  }
  return out;
}

}  // namespace dain::data
