// Copyright 2026 The Doomsday Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "doomsday/core.hpp"
#include "doomsday/tables.hpp"
#include "doomsday/verify.hpp"

namespace doomsday::cli {

enum ExitCode : int { kSuccess = 0, kMismatch = 1, kUsage = 2 };

/// Bad command line. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { Dow, Explain, Tables, Anchors, Verify, Help };

enum class TableId { One, Two, Three, Anchors };

struct CliConfig {
  Command command = Command::Help;
  MethodId method = MethodId::DecadeAnchor;
  std::optional<CalendarDate> date;
  int from_year = 1583;
  int to_year = 3000;
  unsigned jobs = 1;
  bool numeric = false;
  TableId table = TableId::Three;
  tables::Format format = tables::Format::Tsv;
  // Rendered usage text, filled for Command::Help.
  std::string help_text;
};

/// Test seams. An empty engine means the real day_of_week.
struct RunHooks {
  WeekdayFn engine;
};

/// Accepts YYYY-MM-DD and MM/DD/YYYY. Throws UsageError for malformed text or
/// an impossible date.
CalendarDate parse_date_arg(std::string_view text);

/// Parses argv-style arguments, program name excluded.
CliConfig parse_args(const std::vector<std::string>& args);

int run(const CliConfig& config, std::ostream& out, std::ostream& err,
        const RunHooks& hooks = {});

/// parse_args + run; usage errors go to err with exit code 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err, const RunHooks& hooks = {});

std::string usage();

}  // namespace doomsday::cli
