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

#include "doomsday/oracle.hpp"
#include "gtest/gtest.h"

namespace doomsday {
namespace {

int oracle_residue(int y, int m, int d) {
  return oracle::oracle_weekday(CalendarDate(y, m, d)).residue().value();
}

TEST(DoomscenturyTest, PinnedByOracle) {
  // April 4 of a century year is a doomsday and doomsyear(0) = 0, so the
  // reference weekday of that date is the century term itself.
  for (int cc : {18, 19, 20}) {
    EXPECT_EQ(doomscentury(cc).value(), oracle_residue(cc * 100, 4, 4)) << cc;
  }
  EXPECT_EQ(doomscentury(20).value(), 2);
  EXPECT_EQ(doomscentury(19).value(), 3);
  EXPECT_EQ(doomscentury(18).value(), 5);
  EXPECT_THROW(doomscentury(-1), DomainError);
}

TEST(DoomscenturyTest, AllCenturiesMatchOracle) {
  for (int cc = 1; cc <= 99; ++cc) {
    EXPECT_EQ(doomscentury(cc).value(), oracle_residue(cc * 100, 4, 4)) << cc;
  }
}

TEST(MonthAnchorTest, Examples) {
  EXPECT_EQ(month_anchor(4, false), 4);
  EXPECT_EQ(month_anchor(4, true), 4);
  EXPECT_EQ(month_anchor(12, false), 12);
  EXPECT_EQ(month_anchor(2, true), 29);
  EXPECT_EQ(month_anchor(2, false), 28);
  EXPECT_EQ(month_anchor(1, true), 4);
  EXPECT_EQ(month_anchor(1, false), 3);
  EXPECT_THROW(month_anchor(13, false), DomainError);
  EXPECT_EQ(oracle_residue(1996, 2, 29), oracle_residue(1996, 4, 4));
}

TEST(MonthAnchorTest, OnlyJanuaryAndFebruaryDependOnLeap) {
  for (const MonthAnchor& a : month_anchors()) {
    if (a.month <= 2) {
      EXPECT_EQ(a.leap_year_day, a.common_year_day + 1);
    } else {
      EXPECT_EQ(a.leap_year_day, a.common_year_day) << a.month;
    }
  }
}

TEST(MonthAnchorTest, AnchorsShareWeekdayEveryYear) {
  for (int year = 1583; year <= 3000; ++year) {
    const bool leap = is_leap_year(year);
    const int first = oracle_residue(year, 1, month_anchor(1, leap));
    for (int m = 2; m <= 12; ++m) {
      ASSERT_EQ(oracle_residue(year, m, month_anchor(m, leap)), first)
          << year << "-" << m;
    }
  }
}

TEST(DoomsmonthTest, Examples) {
  EXPECT_EQ(doomsmonth(4, 4, false).value(), 0);
  EXPECT_EQ(doomsmonth(6, 13, false).value(), 0);
  EXPECT_EQ(doomsmonth(2, 28, true).value(), 6);
  EXPECT_EQ(oracle_residue(1996, 2, 28),
            (oracle_residue(1996, 2, 29) + 6) % 7);
  EXPECT_THROW(doomsmonth(2, 29, false), DomainError);
  EXPECT_THROW(doomsmonth(4, 31, true), DomainError);
  EXPECT_THROW(doomsmonth(0, 1, true), DomainError);
}

TEST(DayOfWeekTest, Examples) {
  EXPECT_EQ(day_of_week(CalendarDate(2010, 4, 4)).name(), "Sunday");
  EXPECT_EQ(day_of_week(CalendarDate(1974, 4, 4)).name(), "Thursday");
  EXPECT_EQ(day_of_week(CalendarDate(2000, 1, 1)).name(), "Saturday");
  for (MethodId m : kAllMethods) {
    EXPECT_EQ(day_of_week(CalendarDate(2010, 4, 4), m).residue().value(), 0);
    EXPECT_EQ(day_of_week(CalendarDate(1974, 4, 4), m).residue().value(), 4);
    EXPECT_EQ(day_of_week(CalendarDate(2000, 1, 1), m).residue().value(), 6);
  }
}

TEST(DayOfWeekTest, WeeklySuccession) {
  CalendarDate d(1899, 12, 1);
  Weekday w = day_of_week(d);
  for (int i = 0; i < 800; ++i) {
    const CalendarDate next = oracle::next_day(d);
    const Weekday nw = day_of_week(next);
    ASSERT_EQ(nw.residue(), w.residue() + reduce_mod7(1)) << next;
    d = next;
    w = nw;
  }
}

TEST(ExplainTest, DecadeAnchorShowsSum) {
  const Trace t = explain(CalendarDate(1988, 8, 8), MethodId::DecadeAnchor);
  EXPECT_EQ(t.find("doomsyear.2y")->value, 16);
  EXPECT_EQ(t.find("doomsyear.10(y mod 2)")->value, 0);
  EXPECT_EQ(t.find("doomsyear.z")->value, 8);
  EXPECT_EQ(t.find("doomsyear.leaps")->value, 2);
  EXPECT_EQ(t.find("doomsyear.sum")->value, 26);
  EXPECT_EQ(t.find("doomsyear")->value, 5);
  EXPECT_EQ(t.result.value(), oracle_residue(1988, 8, 8));
  EXPECT_EQ(reduce_mod7(t.steps.back().value), t.result);
}

TEST(ExplainTest, AnchorDateHasZeroMonthTerm) {
  const Trace t = explain(CalendarDate(2007, 4, 4), MethodId::True);
  EXPECT_EQ(t.find("doomsmonth")->value, 0);
  EXPECT_EQ(t.result.value(), oracle_residue(2007, 4, 4));
}

TEST(ExplainTest, ConwayShowsHalfAnchor) {
  const Trace t = explain(CalendarDate(1998, 12, 25), MethodId::ConwayZeroAnchor);
  EXPECT_EQ(t.find("doomsyear.zero_anchor")->display, "95.5");
  EXPECT_EQ(t.find("doomsyear.z_0")->value, 3);
  EXPECT_EQ(t.find("doomsyear.leap_0")->value, 1);
  EXPECT_EQ(t.find("doomsyear.anchor_adjustment")->value, -1);
  EXPECT_EQ(t.result.value(), oracle_residue(1998, 12, 25));
}

TEST(ExplainTest, ResultMatchesDayOfWeek) {
  for (MethodId m : kAllMethods) {
    for (int year : {1600, 1700, 1899, 1900, 2000, 2024, 2100}) {
      for (int month = 1; month <= 12; ++month) {
        const CalendarDate d(year, month, 1);
        const Trace t = explain(d, m);
        EXPECT_EQ(t.result, day_of_week(d, m).residue());
        EXPECT_EQ(reduce_mod7(t.steps.back().value), t.result);
      }
    }
  }
}

}  // namespace
}  // namespace doomsday
