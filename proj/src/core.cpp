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

#include "doomsday/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace doomsday {
namespace {

constexpr std::array<std::string_view, 7> kWeekdayNames = {
    "Sunday", "Monday", "Tuesday", "Wednesday",
    "Thursday", "Friday", "Saturday"};

constexpr std::array<int, 12> kDaysInMonth = {31, 28, 31, 30, 31, 30,
                                              31, 31, 30, 31, 30, 31};

bool iequals(std::string_view a, std::string_view b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](char l, char r) {
                      return std::tolower(static_cast<unsigned char>(l)) ==
                             std::tolower(static_cast<unsigned char>(r));
                    });
}

struct MethodNames {
  MethodId id;
  std::string_view name;
  std::string_view kebab;
};

constexpr std::array<MethodNames, 5> kMethodNames = {{
    {MethodId::True, "True", "true"},
    {MethodId::Carrollian, "Carrollian", "carrollian"},
    {MethodId::DecadeAnchor, "DecadeAnchor", "decade-anchor"},
    {MethodId::DecadeAnchorLookup, "DecadeAnchorLookup",
     "decade-anchor-lookup"},
    {MethodId::ConwayZeroAnchor, "ConwayZeroAnchor", "conway-zero-anchor"},
}};

}  // namespace

std::ostream& operator<<(std::ostream& os, Mod7 m) { return os << m.value(); }

std::optional<Weekday> Weekday::from_name(std::string_view name) {
  for (std::size_t i = 0; i < kWeekdayNames.size(); ++i) {
    if (iequals(name, kWeekdayNames[i])) {
      return Weekday(reduce_mod7(static_cast<long long>(i)));
    }
  }
  return std::nullopt;
}

std::string_view Weekday::name() const {
  return kWeekdayNames[static_cast<std::size_t>(residue_.value())];
}

std::ostream& operator<<(std::ostream& os, Weekday w) { return os << w.name(); }

CalendarDate::CalendarDate(int year, int month, int day)
    : year_(year), month_(month), day_(day) {
  if (year < kMinYear || year > kMaxYear) {
    throw DomainError("year " + std::to_string(year) +
                      " outside supported range 1..9999");
  }
  if (month < 1 || month > 12) {
    throw DomainError("month " + std::to_string(month) + " outside 1..12");
  }
  int limit = kDaysInMonth[static_cast<std::size_t>(month - 1)];
  if (month == 2 && is_leap_year(year)) limit = 29;
  if (day < 1 || day > limit) {
    throw DomainError("day " + std::to_string(day) + " invalid for " +
                      std::to_string(year) + "-" + std::to_string(month));
  }
}

std::string CalendarDate::iso() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year_, month_, day_);
  return buf;
}

std::ostream& operator<<(std::ostream& os, const CalendarDate& d) {
  return os << d.iso();
}

SplitYear split_year(int x) {
  if (x < 0 || x > 99) {
    throw DomainError("two-digit year " + std::to_string(x) +
                      " outside 0..99");
  }
  return SplitYear{x / 10, x % 10};
}

CenturySplit split_century(int year) {
  if (year < 1) {
    throw DomainError("year " + std::to_string(year) + " must be >= 1");
  }
  return CenturySplit{year / 100, year % 100};
}

std::string_view method_name(MethodId m) {
  for (const auto& entry : kMethodNames) {
    if (entry.id == m) return entry.name;
  }
  return "?";
}

std::optional<MethodId> parse_method(std::string_view text) {
  for (const auto& entry : kMethodNames) {
    if (iequals(text, entry.name) || iequals(text, entry.kebab)) {
      return entry.id;
    }
  }
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, MethodId m) {
  return os << method_name(m);
}

TraceStep::TraceStep(std::string label, long long value)
    : label(std::move(label)), value(value), display(std::to_string(value)) {}

TraceStep::TraceStep(std::string label, long long value, std::string display)
    : label(std::move(label)), value(value), display(std::move(display)) {}

const TraceStep* Trace::find(std::string_view label) const {
  auto it = std::find_if(steps.begin(), steps.end(),
                         [&](const TraceStep& s) { return s.label == label; });
  return it == steps.end() ? nullptr : &*it;
}

}  // namespace doomsday
