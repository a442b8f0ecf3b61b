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

#include "dainrec/data/parse.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "dainrec/data/errors.hpp"

namespace dain::data {
namespace {

std::vector<std::string_view> split(std::string_view line, std::string_view sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + sep.size();
  }
}

std::string_view trim_eol(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

InteractionRecord parse_fields(const std::vector<std::string_view>& f, std::size_t line_no) {
  if (f[0].empty() || f[1].empty()) throw DataError("empty user or item id", line_no);
  InteractionRecord rec;
  rec.raw_user = std::string(f[0]);
  rec.raw_item = std::string(f[1]);
  const auto r = std::from_chars(f[2].data(), f[2].data() + f[2].size(), rec.rating);
  if (r.ec != std::errc() || r.ptr != f[2].data() + f[2].size() || !std::isfinite(rec.rating)) {
    throw DataError("invalid rating '" + std::string(f[2]) + "'", line_no);
  }
  const auto t = std::from_chars(f[3].data(), f[3].data() + f[3].size(), rec.timestamp);
  if (t.ec != std::errc() || t.ptr != f[3].data() + f[3].size() || rec.timestamp < 0) {
    throw DataError("invalid timestamp '" + std::string(f[3]) + "'", line_no);
  }
  return rec;
}

template <typename LineFn>
InteractionLog parse_lines(std::istream& in, LineFn&& fn) {
  InteractionLog log;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim_eol(line);
    if (view.empty()) continue;
    fn(view, line_no, log);
  }
  if (log.records.empty()) throw DataError("no interaction records in input");
  return log;
}

}  // namespace

InteractionLog parse_movielens(std::istream& in) {
  return parse_lines(in, [](std::string_view view, std::size_t line_no, InteractionLog& log) {
    const auto fields = split(view, "::");
    if (fields.size() != 4) {
      throw DataError("expected 4 '::'-separated fields, got " + std::to_string(fields.size()),
                      line_no);
    }
    log.records.push_back(parse_fields(fields, line_no));
  });
}

InteractionLog parse_tsv(std::istream& in, bool has_header) {
  bool header_pending = has_header;
  return parse_lines(in, [&](std::string_view view, std::size_t line_no, InteractionLog& log) {
    const auto fields = split(view, "\t");
    if (fields.size() != 4) {
      throw DataError("expected 4 tab-separated columns, got " + std::to_string(fields.size()),
                      line_no);
    }
    if (header_pending) {
      header_pending = false;
      return;
    }
    log.records.push_back(parse_fields(fields, line_no));
  });
}

void write_tsv(const InteractionLog& log, std::ostream& out, bool with_header) {
  if (with_header) out << "user\titem\trating\ttimestamp\n";
  char buf[64];
  for (const auto& rec : log.records) {
    const auto r = std::to_chars(buf, buf + sizeof buf, rec.rating);
    out << rec.raw_user << '\t' << rec.raw_item << '\t' << std::string_view(buf, r.ptr - buf)
        << '\t' << rec.timestamp << '\n';
  }
}

InteractionLog load_log(const std::filesystem::path& path, LogFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open data file '" + path.string() + "'");
  try {
    if (format == LogFormat::movielens) return parse_movielens(in);
    std::string first;
    const auto start = in.tellg();
    std::getline(in, first);
    in.clear();
    in.seekg(start);
    const bool header = first.rfind("user\t", 0) == 0;
    return parse_tsv(in, header);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

LogFormat parse_format(const std::string& name) {
  if (name == "movielens") return LogFormat::movielens;
  if (name == "tsv") return LogFormat::tsv;
  throw std::invalid_argument("unknown data format '" + name + "' (expected movielens or tsv)");
}

}  // namespace dain::data
