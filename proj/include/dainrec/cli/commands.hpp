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
#include <iosfwd>
#include <string>
#include <vector>

namespace dain::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,  // bad flags or configuration
  kExitData = 2,   // unreadable or malformed data, id-space mismatch
  kExitCheckpoint = 3,
  kExitGradCheck = 4,
};

// Seeded stream ids derived from the run seed.
inline constexpr std::uint64_t kInitStream = 1;
inline constexpr std::uint64_t kSplitStream = 3;

/// Runs one command line (args excludes the program name). Normal output goes
/// to out, diagnostics to err. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dain::cli
