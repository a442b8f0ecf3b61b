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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace dain::data {

struct InteractionRecord {
  std::string raw_user;
  std::string raw_item;
  double rating = 0.0;
  std::int64_t timestamp = 0;

  friend bool operator==(const InteractionRecord&, const InteractionRecord&) = default;
};

struct InteractionLog {
  std::vector<InteractionRecord> records;
};

enum class LogFormat { movielens, tsv };

/// `user::item::rating::timestamp` per line. Blank lines are ignored.
/// Throws DataError naming the offending line, or on an empty input.
InteractionLog parse_movielens(std::istream& in);

/// `user<TAB>item<TAB>rating<TAB>timestamp` per line, optionally after a header row.
InteractionLog parse_tsv(std::istream& in, bool has_header);

/// Writes records in parse_tsv's format; ratings use the shortest exact representation.
void write_tsv(const InteractionLog& log, std::ostream& out, bool with_header);

/// Opens and parses a file. TSV input is assumed to start with a header row
/// when its first field is literally "user".
InteractionLog load_log(const std::filesystem::path& path, LogFormat format);

LogFormat parse_format(const std::string& name);

}  // namespace dain::data
