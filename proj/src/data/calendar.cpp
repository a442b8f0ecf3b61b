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

#include "dainrec/data/calendar.hpp"

#include <stdexcept>
#include <string>

namespace dain::data {

model::Context context_from_timestamp(std::int64_t ts) {
  if (ts < 0) throw std::invalid_argument("negative timestamp " + std::to_string(ts));
  constexpr std::int64_t kDay = 86400;
  const std::int64_t days = ts / kDay;
  // 1970-01-01 was a Thursday (weekday 3).
  return {static_cast<std::uint8_t>((ts % kDay) / 3600), static_cast<std::uint8_t>((days + 3) % 7)};
}

}  // namespace dain::data
