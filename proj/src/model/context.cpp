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

#include "dainrec/model/context.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dain::model {
namespace {

void check(const ContextSpec& spec, int hour, int weekday) {
  if (!spec.enabled) throw std::invalid_argument("encode_context: context is disabled");
  if (hour < 0 || static_cast<std::size_t>(hour) >= spec.hour_buckets) {
    throw std::out_of_range("encode_context: hour " + std::to_string(hour) + " outside [0, " +
                            std::to_string(spec.hour_buckets) + ")");
  }
  if (weekday < 0 || static_cast<std::size_t>(weekday) >= spec.weekday_buckets) {
    throw std::out_of_range("encode_context: weekday " + std::to_string(weekday) +
                            " outside [0, " + std::to_string(spec.weekday_buckets) + ")");
  }
}

}  // namespace

numerics::Vector encode_context(const ContextSpec& spec, int hour, int weekday) {
  check(spec, hour, weekday);
  numerics::Vector out(spec.width(), 0.0);
  out[static_cast<std::size_t>(hour)] = 1.0;
  out[spec.hour_buckets + static_cast<std::size_t>(weekday)] = 1.0;
  return out;
}

void encode_context_into(const ContextSpec& spec, Context ctx, std::span<double> out) {
  check(spec, ctx.hour, ctx.weekday);
  if (out.size() != spec.width()) {
    throw std::invalid_argument("encode_context: output width " + std::to_string(out.size()) +
                                " != " + std::to_string(spec.width()));
  }
  std::fill(out.begin(), out.end(), 0.0);
  out[ctx.hour] = 1.0;
  out[spec.hour_buckets + ctx.weekday] = 1.0;
}

}  // namespace dain::model
