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

#include "doomsday/core.hpp"
#include "doomsday/doomsyear.hpp"

namespace doomsday {

/// The reference day of a month that falls on the year's doomsday.
struct MonthAnchor {
  int month;
  int common_year_day;
  int leap_year_day;
};

/// Reference days for January..December.
std::span<const MonthAnchor> month_anchors();

/// Century term, (5 (cc mod 4) + 2) mod 7. Absorbs the 100/400 leap rule.
Mod7 doomscentury(int cc);

int month_anchor(int month, bool leap);

/// Offset of (month, day) from that month's reference day.
Mod7 doomsmonth(int month, int day, bool leap);

/// Weekday of the year's doomsday: doomscentury + doomsyear.
Mod7 doomsday_of_year(int year, MethodId method = MethodId::DecadeAnchor);

Weekday day_of_week(const CalendarDate& date,
                    MethodId method = MethodId::DecadeAnchor);

/// Full breakdown: century term, the doomsyear sub-trace (labels prefixed
/// with "doomsyear."), month term and the final sum.
Trace explain(const CalendarDate& date,
              MethodId method = MethodId::DecadeAnchor);

}  // namespace doomsday
