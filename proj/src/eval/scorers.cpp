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

#include "dainrec/eval/scorers.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "dainrec/numerics/rng.hpp"

namespace dain::eval {

std::vector<double> DainScorer::score(std::size_t user, std::span<const std::size_t> items,
                                      const model::Context& ctx) const {
  std::optional<model::Context> c;
  if (model_.context().enabled) c = ctx;
  return model::predict_batch(model_, user, items, c);
}

std::vector<double> MfScorer::score(std::size_t user, std::span<const std::size_t> items,
                                    const model::Context&) const {
  return model::mf_predict_batch(model_, user, items);
}

PopularityScorer::PopularityScorer(const data::Dataset& train)
    : num_users_(train.num_users), counts_(train.num_items, 0.0) {
  for (const auto& x : train.interactions) counts_[x.item] += 1.0;
}

std::vector<double> PopularityScorer::score(std::size_t, std::span<const std::size_t> items,
                                            const model::Context&) const {
  std::vector<double> out;
  out.reserve(items.size());
  for (std::size_t item : items) out.push_back(counts_.at(item));
  return out;
}

std::vector<double> RandomScorer::score(std::size_t user, std::span<const std::size_t> items,
                                        const model::Context&) const {
  std::vector<double> out;
  out.reserve(items.size());
  for (std::size_t item : items) {
    if (item >= num_items_) throw std::out_of_range("item id " + std::to_string(item));
    std::uint64_t x = seed_ ^ (0xD1B54A32D192ED03ULL * (static_cast<std::uint64_t>(user) + 1));
    x ^= 0x8CB92BA72F3D8DD7ULL * (static_cast<std::uint64_t>(item) + 1);
    out.push_back(static_cast<double>(numerics::splitmix64(x) >> 11) * 0x1.0p-53);
  }
  return out;
}

}  // namespace dain::eval
