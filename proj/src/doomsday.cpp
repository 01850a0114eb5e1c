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

#include "doomsday/doomsday.hpp"

namespace doomsday {
namespace {

constexpr std::array<MonthAnchor, 12> kMonthAnchors = {{
    {1, 3, 4},
    {2, 28, 29},
    {3, 7, 7},
    {4, 4, 4},
    {5, 9, 9},
    {6, 6, 6},
    {7, 11, 11},
    {8, 8, 8},
    {9, 5, 5},
    {10, 10, 10},
    {11, 7, 7},
    {12, 12, 12},
}};

void check_month(int month) {
  if (month < 1 || month > 12) {
    throw DomainError("month " + std::to_string(month) + " outside 1..12");
  }
}

}  // namespace

std::span<const MonthAnchor> month_anchors() { return kMonthAnchors; }

Mod7 doomscentury(int cc) {
  if (cc < 0) throw DomainError("century must be >= 0");
  return reduce_mod7(5 * (cc % 4) + 2);
}

int month_anchor(int month, bool leap) {
  check_month(month);
  const MonthAnchor& a = kMonthAnchors[static_cast<std::size_t>(month - 1)];
  return leap ? a.leap_year_day : a.common_year_day;
}

Mod7 doomsmonth(int month, int day, bool leap) {
  check_month(month);
  // Any year with the right leap status validates (month, day).
  CalendarDate(leap ? 2000 : 2001, month, day);
  return reduce_mod7(day - month_anchor(month, leap));
}

Mod7 doomsday_of_year(int year, MethodId method) {
  const CenturySplit cs = split_century(year);
  return doomscentury(cs.cc) + doomsyear(cs.yy, method);
}

Weekday day_of_week(const CalendarDate& date, MethodId method) {
  const bool leap = is_leap_year(date.year());
  return Weekday(doomsday_of_year(date.year(), method) +
                 doomsmonth(date.month(), date.day(), leap));
}

Trace explain(const CalendarDate& date, MethodId method) {
  const CenturySplit cs = split_century(date.year());
  const bool leap = is_leap_year(date.year());
  const Mod7 century = doomscentury(cs.cc);
  const Trace year_trace = doomsyear_trace(cs.yy, method);
  const int anchor_day = month_anchor(date.month(), leap);
  const Mod7 month = doomsmonth(date.month(), date.day(), leap);

  Trace t{method, {}, day_of_week(date, method).residue()};
  t.steps.emplace_back("cc", cs.cc);
  t.steps.emplace_back("yy", cs.yy);
  t.steps.emplace_back("doomscentury", century.value());
  for (const TraceStep& s : year_trace.steps) {
    t.steps.emplace_back("doomsyear." + s.label, s.value, s.display);
  }
  t.steps.emplace_back("doomsyear", year_trace.result.value());
  t.steps.emplace_back("month_anchor", anchor_day);
  t.steps.emplace_back("doomsmonth", month.value());
  t.steps.emplace_back("sum", century.value() + year_trace.result.value() +
                                  month.value());
  return t;
}

}  // namespace doomsday
