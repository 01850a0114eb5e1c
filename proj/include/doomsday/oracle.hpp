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

// Reference weekday computation by day counting. Shares nothing with the
// Doomsday engine so the two can be checked against each other.

#include "doomsday/core.hpp"

namespace doomsday::oracle {

/// Days since the proleptic Gregorian epoch; 0001-01-01 is day 1.
struct DayNumber {
  long long value;
  friend auto operator<=>(const DayNumber&, const DayNumber&) = default;
};

DayNumber rata_die(const CalendarDate& date);

/// Inverse of rata_die. Throws DomainError outside years 1..9999.
CalendarDate from_day_number(DayNumber n);

/// Day 1 is a Monday.
Weekday oracle_weekday(const CalendarDate& date);

/// Throws DomainError on 9999-12-31.
CalendarDate next_day(const CalendarDate& date);

int days_in_year(int year);

}  // namespace doomsday::oracle
