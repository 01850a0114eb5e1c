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

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace doomsday {

/// Raised for any out-of-range argument or impossible calendar date.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A residue modulo 7. Always fully reduced to 0..6.
class Mod7 {
 public:
  constexpr Mod7() = default;

  /// Reduces any integer, including negatives, into 0..6.
  static constexpr Mod7 reduce(long long n) {
    long long r = n % 7;
    if (r < 0) r += 7;
    return Mod7(static_cast<int>(r));
  }

  constexpr int value() const { return value_; }

  friend constexpr Mod7 operator+(Mod7 a, Mod7 b) {
    return reduce(a.value_ + b.value_);
  }
  friend constexpr Mod7 operator-(Mod7 a, Mod7 b) {
    return reduce(a.value_ - b.value_);
  }
  constexpr Mod7 operator-() const { return reduce(-value_); }
  friend constexpr bool operator==(Mod7, Mod7) = default;

 private:
  constexpr explicit Mod7(int v) : value_(v) {}
  int value_ = 0;
};

constexpr Mod7 reduce_mod7(long long n) { return Mod7::reduce(n); }

std::ostream& operator<<(std::ostream& os, Mod7 m);

/// Day of the week, 0 = Sunday through 6 = Saturday.
class Weekday {
 public:
  constexpr explicit Weekday(Mod7 residue) : residue_(residue) {}

  /// Parses a canonical English name ("Sunday".."Saturday"), case-insensitive.
  static std::optional<Weekday> from_name(std::string_view name);

  constexpr Mod7 residue() const { return residue_; }
  std::string_view name() const;

  friend constexpr bool operator==(Weekday, Weekday) = default;

 private:
  Mod7 residue_;
};

std::ostream& operator<<(std::ostream& os, Weekday w);

// Gregorian leap rule, including the 100/400 exception.
constexpr bool is_leap_year(int year) {
  return year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
}

inline constexpr int kMinYear = 1;
inline constexpr int kMaxYear = 9999;

/// A validated proleptic-Gregorian date in years 1..9999.
class CalendarDate {
 public:
  /// Throws DomainError unless (year, month, day) names a real date.
  CalendarDate(int year, int month, int day);

  int year() const { return year_; }
  int month() const { return month_; }
  int day() const { return day_; }

  /// YYYY-MM-DD, zero padded.
  std::string iso() const;

  friend auto operator<=>(const CalendarDate&, const CalendarDate&) = default;

 private:
  int year_;
  int month_;
  int day_;
};

std::ostream& operator<<(std::ostream& os, const CalendarDate& d);

struct CenturySplit {
  int cc;
  int yy;
  friend bool operator==(const CenturySplit&, const CenturySplit&) = default;
};

/// Tens and ones digits of a two-digit year.
struct SplitYear {
  int y;
  int z;
  constexpr int two_digit_year() const { return 10 * y + z; }
  constexpr bool odd_decade() const { return y % 2 == 1; }
  friend bool operator==(const SplitYear&, const SplitYear&) = default;
};

SplitYear split_year(int x);
CenturySplit split_century(int year);

enum class MethodId : std::uint8_t {
  True,
  Carrollian,
  DecadeAnchor,
  DecadeAnchorLookup,
  ConwayZeroAnchor,
};

inline constexpr std::array<MethodId, 5> kAllMethods = {
    MethodId::True, MethodId::Carrollian, MethodId::DecadeAnchor,
    MethodId::DecadeAnchorLookup, MethodId::ConwayZeroAnchor};

std::string_view method_name(MethodId m);

/// Accepts the enumerator name ("DecadeAnchor") or its kebab-case form
/// ("decade-anchor"), case-insensitive.
std::optional<MethodId> parse_method(std::string_view text);

std::ostream& operator<<(std::ostream& os, MethodId m);

struct TraceStep {
  std::string label;
  long long value;
  // Rendered form of value; differs from the integer only for half anchors.
  std::string display;

  TraceStep(std::string label, long long value);
  TraceStep(std::string label, long long value, std::string display);
};

/// Labeled intermediate values of one calculation. The last step's value
/// reduces to the result.
struct Trace {
  MethodId method;
  std::vector<TraceStep> steps;
  Mod7 result;

  const TraceStep* find(std::string_view label) const;
};

}  // namespace doomsday
