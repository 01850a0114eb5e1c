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

#include "doomsday/doomsyear.hpp"

#include <algorithm>
#include <vector>

namespace doomsday {
namespace {

void check_two_digit(int x) {
  if (x < 0 || x > 99) {
    throw DomainError("two-digit year " + std::to_string(x) +
                      " outside 0..99");
  }
}

void check_digit(int d, const char* what) {
  if (d < 0 || d > 9) {
    throw DomainError(std::string(what) + " digit " + std::to_string(d) +
                      " outside 0..9");
  }
}

// Within a century, year 00 belongs to the century term.
constexpr bool leap_in_century(int w) { return w > 0 && w % 4 == 0; }

int count_leaps(int after, int through) {
  int n = 0;
  for (int w = after + 1; w <= through; ++w) {
    if (leap_in_century(w)) ++n;
  }
  return n;
}

constexpr std::array<int, 10> kDecadeAnchorTable = {0, 5, 4, 2, 1,
                                                    6, 5, 3, 2, 0};

// Columns: even decade, odd decade.
constexpr std::array<std::array<int, 2>, 10> kLeapsTable = {{
    {0, 0}, {0, 0}, {0, 1}, {0, 1}, {1, 1},
    {1, 1}, {1, 2}, {1, 2}, {2, 2}, {2, 2},
}};

std::vector<ZeroAnchor> build_zero_anchors() {
  std::vector<ZeroAnchor> anchors;
  for (int x = 0; x <= 99; ++x) {
    if (true_doomsyear(x).value() == 0) {
      anchors.push_back({x, false});
    } else if (x < 99 && true_doomsyear(x).value() == 6 &&
               true_doomsyear(x + 1).value() == 1) {
      anchors.push_back({x, true});
    }
  }
  return anchors;
}

}  // namespace

std::string ZeroAnchor::label() const {
  return std::to_string(base_year) + (is_half ? ".5" : "");
}

Mod7 true_doomsyear(int x) {
  check_two_digit(x);
  return reduce_mod7(x + x / 4);
}

Mod7 carrollian_doomsyear(int x) {
  check_two_digit(x);
  const int dozens = x / 12;
  const int rest = x % 12;
  return reduce_mod7(dozens + rest + rest / 4);
}

LeapCount leaps_formula(SplitYear s) {
  check_digit(s.y, "tens");
  check_digit(s.z, "ones");
  return LeapCount((2 * (s.y % 2) + s.z) / 4);
}

LeapCount leaps_by_counting(SplitYear s) {
  check_digit(s.y, "tens");
  check_digit(s.z, "ones");
  return LeapCount(count_leaps(10 * s.y, 10 * s.y + s.z));
}

LeapCount leaps_table(int z, bool y_is_odd) {
  check_digit(z, "ones");
  return LeapCount(kLeapsTable[static_cast<std::size_t>(z)][y_is_odd ? 1 : 0]);
}

int decade_anchor_raw(int y) {
  check_digit(y, "tens");
  return 2 * y + 10 * (y % 2);
}

Mod7 decade_anchor(int y) { return reduce_mod7(decade_anchor_raw(y)); }

int proposed_doomsyear_sum(SplitYear s) {
  return decade_anchor_raw(s.y) + s.z + leaps_formula(s).count();
}

Mod7 proposed_doomsyear(SplitYear s) {
  return reduce_mod7(proposed_doomsyear_sum(s));
}

Mod7 proposed_doomsyear_lookup(SplitYear s) {
  check_digit(s.y, "tens");
  const int anchor = kDecadeAnchorTable[static_cast<std::size_t>(s.y)];
  const int leaps = leaps_table(s.z, s.odd_decade()).count();
  return reduce_mod7(anchor + s.z + leaps);
}

std::span<const ZeroAnchor> derive_zero_anchors() {
  static const std::vector<ZeroAnchor> anchors = build_zero_anchors();
  return anchors;
}

ZeroAnchor select_zero_anchor(int x) {
  check_two_digit(x);
  const auto anchors = derive_zero_anchors();
  // Last anchor that is either strictly below x or an integer anchor at x.
  auto it = std::find_if(anchors.rbegin(), anchors.rend(),
                         [x](const ZeroAnchor& a) {
                           return a.base_year < x ||
                                  (a.base_year == x && !a.is_half);
                         });
  // Year 0 is always an integer anchor, so the search cannot fail.
  return *it;
}

Mod7 conway_doomsyear(int x) {
  const ZeroAnchor anchor = select_zero_anchor(x);
  const int offset = x - anchor.base_year;
  const int leaps = count_leaps(anchor.base_year, x);
  const int adjustment = anchor.is_half ? -1 : 0;
  return reduce_mod7(adjustment + offset + leaps);
}

Mod7 doomsyear(int x, MethodId method) {
  switch (method) {
    case MethodId::True:
      return true_doomsyear(x);
    case MethodId::Carrollian:
      return carrollian_doomsyear(x);
    case MethodId::DecadeAnchor:
      return proposed_doomsyear(split_year(x));
    case MethodId::DecadeAnchorLookup:
      return proposed_doomsyear_lookup(split_year(x));
    case MethodId::ConwayZeroAnchor:
      return conway_doomsyear(x);
  }
  throw DomainError("unknown method");
}

Trace doomsyear_trace(int x, MethodId method) {
  check_two_digit(x);
  Trace t{method, {}, doomsyear(x, method)};
  auto& steps = t.steps;
  switch (method) {
    case MethodId::True:
      steps.emplace_back("x", x);
      steps.emplace_back("x div 4", x / 4);
      steps.emplace_back("sum", x + x / 4);
      break;
    case MethodId::Carrollian: {
      const int rest = x % 12;
      steps.emplace_back("anchor_12", x / 12);
      steps.emplace_back("z_12", rest);
      steps.emplace_back("leap_12", rest / 4);
      steps.emplace_back("sum", x / 12 + rest + rest / 4);
      break;
    }
    case MethodId::DecadeAnchor: {
      const SplitYear s = split_year(x);
      steps.emplace_back("2y", 2 * s.y);
      steps.emplace_back("10(y mod 2)", 10 * (s.y % 2));
      steps.emplace_back("z", s.z);
      steps.emplace_back("leaps", leaps_formula(s).count());
      steps.emplace_back("sum", proposed_doomsyear_sum(s));
      break;
    }
    case MethodId::DecadeAnchorLookup: {
      const SplitYear s = split_year(x);
      const int anchor = kDecadeAnchorTable[static_cast<std::size_t>(s.y)];
      const int leaps = leaps_table(s.z, s.odd_decade()).count();
      steps.emplace_back("decade_anchor", anchor);
      steps.emplace_back("z", s.z);
      steps.emplace_back("leaps", leaps);
      steps.emplace_back("sum", anchor + s.z + leaps);
      break;
    }
    case MethodId::ConwayZeroAnchor: {
      const ZeroAnchor a = select_zero_anchor(x);
      const int offset = x - a.base_year;
      const int leaps = count_leaps(a.base_year, x);
      const int adjustment = a.is_half ? -1 : 0;
      steps.emplace_back("zero_anchor", a.base_year, a.label());
      steps.emplace_back("z_0", offset);
      steps.emplace_back("leap_0", leaps);
      steps.emplace_back("anchor_adjustment", adjustment);
      steps.emplace_back("sum", adjustment + offset + leaps);
      break;
    }
  }
  return t;
}

}  // namespace doomsday
