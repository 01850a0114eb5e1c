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

#include <functional>
#include <optional>

#include "doomsday/core.hpp"

namespace doomsday {

/// Engine under test. Defaults to day_of_week.
using WeekdayFn = std::function<Weekday(const CalendarDate&, MethodId)>;

struct Mismatch {
  CalendarDate date;
  MethodId method;
  Weekday got;
  Weekday expected;
};

struct VerifyReport {
  long long dates_checked = 0;
  // Earliest (date, method) pair in scan order, if any.
  std::optional<Mismatch> first_mismatch;
};

struct VerifyOptions {
  int from_year = 1583;
  int to_year = 3000;
  unsigned jobs = 1;
  WeekdayFn engine;
};

/// Checks every date of years from_year..to_year, every method, against
/// oracle_weekday. Years are split into contiguous blocks across `jobs`
/// threads; the report is identical for any job count. dates_checked counts
/// dates scanned up to and including the first mismatch's date, or the full
/// range when everything agrees.
VerifyReport verify_range(const VerifyOptions& options);

}  // namespace doomsday
