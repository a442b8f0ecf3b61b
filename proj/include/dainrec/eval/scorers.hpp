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
#include <span>
#include <vector>

#include "dainrec/data/dataset.hpp"
#include "dainrec/model/context.hpp"
#include "dainrec/model/dain.hpp"
#include "dainrec/model/mf.hpp"

namespace dain::eval {

/// Anything that can score candidate items for a user in a context.
/// Implementations must be deterministic and safe for concurrent calls.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::size_t num_users() const = 0;
  virtual std::size_t num_items() const = 0;
  virtual std::vector<double> score(std::size_t user, std::span<const std::size_t> items,
                                    const model::Context& ctx) const = 0;
};

/// Passes the context only when the model was built with context enabled.
class DainScorer final : public Scorer {
 public:
  explicit DainScorer(const model::DainModel& m) : model_(m) {}
  std::size_t num_users() const override { return model_.num_users(); }
  std::size_t num_items() const override { return model_.num_items(); }
  std::vector<double> score(std::size_t user, std::span<const std::size_t> items,
                            const model::Context& ctx) const override;

 private:
  const model::DainModel& model_;
};

class MfScorer final : public Scorer {
 public:
  explicit MfScorer(const model::MfModel& m) : model_(m) {}
  std::size_t num_users() const override { return model_.num_users(); }
  std::size_t num_items() const override { return model_.num_items(); }
  std::vector<double> score(std::size_t user, std::span<const std::size_t> items,
                            const model::Context& ctx) const override;

 private:
  const model::MfModel& model_;
};

/// Scores an item by its number of training interactions.
class PopularityScorer final : public Scorer {
 public:
  explicit PopularityScorer(const data::Dataset& train);
  std::size_t num_users() const override { return num_users_; }
  std::size_t num_items() const override { return counts_.size(); }
  std::vector<double> score(std::size_t user, std::span<const std::size_t> items,
                            const model::Context& ctx) const override;

 private:
  std::size_t num_users_;
  std::vector<double> counts_;
};

/// Uniform [0, 1) score that is a fixed hash of (seed, user, item).
class RandomScorer final : public Scorer {
 public:
  RandomScorer(std::uint64_t seed, std::size_t num_users, std::size_t num_items)
      : seed_(seed), num_users_(num_users), num_items_(num_items) {}
  std::size_t num_users() const override { return num_users_; }
  std::size_t num_items() const override { return num_items_; }
  std::vector<double> score(std::size_t user, std::span<const std::size_t> items,
                            const model::Context& ctx) const override;

 private:
  std::uint64_t seed_;
  std::size_t num_users_;
  std::size_t num_items_;
};

}  // namespace dain::eval
