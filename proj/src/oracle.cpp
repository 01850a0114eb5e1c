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

#include "doomsday/oracle.hpp"

namespace doomsday::oracle {
namespace {

constexpr std::array<int, 12> kMonthLength = {31, 28, 31, 30, 31, 30,
                                              31, 31, 30, 31, 30, 31};

bool gregorian_leap(int year) {
  if (year % 400 == 0) return true;
  if (year % 100 == 0) return false;
  return year % 4 == 0;
}

int month_length(int year, int month) {
  if (month == 2 && gregorian_leap(year)) return 29;
  return kMonthLength[static_cast<std::size_t>(month - 1)];
}

// Days in years 1 .. year-1.
long long days_before_year(int year) {
  const long long p = year - 1;
  return 365 * p + p / 4 - p / 100 + p / 400;
}

}  // namespace

int days_in_year(int year) { return gregorian_leap(year) ? 366 : 365; }

DayNumber rata_die(const CalendarDate& date) {
  long long n = days_before_year(date.year());
  for (int m = 1; m < date.month(); ++m) n += month_length(date.year(), m);
  return DayNumber{n + date.day()};
}

CalendarDate from_day_number(DayNumber n) {
  if (n.value < 1 || n.value > days_before_year(kMaxYear + 1)) {
    throw DomainError("day number " + std::to_string(n.value) +
                      " outside years 1..9999");
  }
  // Estimate from the mean year length, then correct.
  int year = static_cast<int>((n.value - 1) * 400 / 146097) + 1;
  while (days_before_year(year) >= n.value) --year;
  while (days_before_year(year + 1) < n.value) ++year;
  long long rest = n.value - days_before_year(year);
  int month = 1;
  while (rest > month_length(year, month)) {
    rest -= month_length(year, month);
    ++month;
  }
  return CalendarDate(year, month, static_cast<int>(rest));
}

Weekday oracle_weekday(const CalendarDate& date) {
  return Weekday(reduce_mod7(rata_die(date).value));
}

CalendarDate next_day(const CalendarDate& date) {
  const int y = date.year();
  const int m = date.month();
  const int d = date.day();
  if (d < month_length(y, m)) return CalendarDate(y, m, d + 1);
  if (m < 12) return CalendarDate(y, m + 1, 1);
  if (y == kMaxYear) throw DomainError("no day after 9999-12-31");
  return CalendarDate(y + 1, 1, 1);
}

}  // namespace doomsday::oracle
