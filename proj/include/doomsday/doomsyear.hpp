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

// Year-within-century term of the Doomsday rule. Every strategy here maps a
// two-digit year 0..99 to the same residue; they differ in how the sum is
// split into an anchor, an offset from it, and a leap-year correction.

#include <span>

#include "doomsday/core.hpp"

namespace doomsday {

/// Leap years counted after an anchor year, up to and including the input.
/// Never more than 2 within a decade.
class LeapCount {
 public:
  constexpr explicit LeapCount(int count) : count_(count) {
    if (count < 0 || count > 2) throw DomainError("leap count outside 0..2");
  }
  constexpr int count() const { return count_; }
  friend constexpr bool operator==(LeapCount, LeapCount) = default;

 private:
  int count_;
};

/// A year of the century whose doomsyear is zero. Half anchors sit between
/// base_year (doomsyear 6) and base_year + 1 (doomsyear 1), where a leap
/// year skips over zero.
struct ZeroAnchor {
  int base_year;
  bool is_half;

  /// "11.5" for a half anchor, "17" otherwise.
  std::string label() const;
  friend bool operator==(const ZeroAnchor&, const ZeroAnchor&) = default;
};

// x + floor(x / 4).
Mod7 true_doomsyear(int x);

// floor(x / 12) + x mod 12 + floor((x mod 12) / 4).
Mod7 carrollian_doomsyear(int x);

// floor((2 (y mod 2) + z) / 4).
LeapCount leaps_formula(SplitYear s);

// Leap years w in (10y, 10y + z], by enumeration.
LeapCount leaps_by_counting(SplitYear s);

// Memorized table of leaps by ones digit, resolved by decade parity.
LeapCount leaps_table(int z, bool y_is_odd);

/// 2y + 10 (y mod 2), unreduced. Ranges over 0..28.
int decade_anchor_raw(int y);
Mod7 decade_anchor(int y);

/// 2y + 10 (y mod 2) + z + leaps before reduction; always within 0..39.
int proposed_doomsyear_sum(SplitYear s);

Mod7 proposed_doomsyear(SplitYear s);

/// Same sum with the decade anchor read from its memorized table.
Mod7 proposed_doomsyear_lookup(SplitYear s);

/// The 18 zero anchors of a century, ascending. Derived from
/// true_doomsyear once and cached.
std::span<const ZeroAnchor> derive_zero_anchors();

/// Anchor used for x: the greatest anchor below x, or x itself when x is
/// an integer anchor.
ZeroAnchor select_zero_anchor(int x);

Mod7 conway_doomsyear(int x);

Mod7 doomsyear(int x, MethodId method);

/// Step-by-step breakdown of doomsyear(x, method).
///
/// Step labels per method:
///   True               x, x div 4, sum
///   Carrollian         anchor_12, z_12, leap_12, sum
///   DecadeAnchor       2y, 10(y mod 2), z, leaps, sum
///   DecadeAnchorLookup decade_anchor, z, leaps, sum
///   ConwayZeroAnchor   zero_anchor, z_0, leap_0, anchor_adjustment, sum
Trace doomsyear_trace(int x, MethodId method);

}  // namespace doomsday
