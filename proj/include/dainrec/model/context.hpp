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

#include "dainrec/numerics/matrix.hpp"

namespace dain::model {

/// Time context of one interaction. weekday 0 is Monday.
struct Context {
  std::uint8_t hour = 0;
  std::uint8_t weekday = 0;

  friend bool operator==(const Context&, const Context&) = default;
};

/// One-hot hour-of-day concatenated with one-hot day-of-week.
struct ContextSpec {
  bool enabled = false;
  std::size_t hour_buckets = 24;
  std::size_t weekday_buckets = 7;

  std::size_t width() const noexcept { return enabled ? hour_buckets + weekday_buckets : 0; }

  friend bool operator==(const ContextSpec&, const ContextSpec&) = default;
};

numerics::Vector encode_context(const ContextSpec& spec, int hour, int weekday);

/// Writes the encoding into out, which must be exactly spec.width() long.
void encode_context_into(const ContextSpec& spec, Context ctx, std::span<double> out);

}  // namespace dain::model
