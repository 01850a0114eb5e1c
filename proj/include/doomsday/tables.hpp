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

#include <string>
#include <variant>
#include <vector>

#include "doomsday/core.hpp"

namespace doomsday::tables {

using Cell = std::variant<long long, std::string>;

/// A rectangular text table; every row has header.size() cells.
struct TableDocument {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Tsv, Markdown };

/// y, decade, raw, anchor.
TableDocument table1();
/// z, leaps, leaps_even, leaps_odd.
TableDocument table2();
/// year, carrollian, proposed.
TableDocument table3();
/// zero_anchor, one row per derived anchor.
TableDocument anchor_table();

/// Byte-exact rendering. TSV: tab-separated header line then one line per
/// row, each terminated by '\n'. Markdown: a pipe table preceded by the title.
std::string render(const TableDocument& doc, Format format);

std::string cell_text(const Cell& c);

}  // namespace doomsday::tables
