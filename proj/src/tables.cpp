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

#include "doomsday/tables.hpp"

#include <sstream>

#include "doomsday/doomsyear.hpp"

namespace doomsday::tables {
namespace {

std::string decade_label(int y) { return std::to_string(y) + "0's"; }

std::string possible_leaps(int even, int odd) {
  if (even == odd) return std::to_string(even);
  return std::to_string(even) + " or " + std::to_string(odd);
}

void check_arity(const TableDocument& doc) {
  for (const auto& row : doc.rows) {
    if (row.size() != doc.header.size()) {
      throw DomainError("row arity does not match header in \"" + doc.title +
                        "\"");
    }
  }
}

void join(std::ostream& os, const std::vector<std::string>& cells,
          std::string_view sep) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << sep;
    os << cells[i];
  }
}

}  // namespace

std::string cell_text(const Cell& c) {
  if (const auto* n = std::get_if<long long>(&c)) return std::to_string(*n);
  return std::get<std::string>(c);
}

TableDocument table1() {
  TableDocument doc{"Decade anchor lookup", {"y", "decade", "raw", "anchor"}, {}};
  for (int y = 0; y <= 9; ++y) {
    doc.rows.push_back({y, decade_label(y), decade_anchor_raw(y),
                        decade_anchor(y).value()});
  }
  return doc;
}

TableDocument table2() {
  TableDocument doc{"Possible values for leaps",
                    {"z", "leaps", "leaps_even", "leaps_odd"},
                    {}};
  for (int z = 0; z <= 9; ++z) {
    const int even = leaps_formula(SplitYear{0, z}).count();
    const int odd = leaps_formula(SplitYear{1, z}).count();
    doc.rows.push_back({z, possible_leaps(even, odd), even, odd});
  }
  return doc;
}

TableDocument table3() {
  TableDocument doc{"Doomsyear values from 00 to 99",
                    {"year", "carrollian", "proposed"},
                    {}};
  for (int x = 0; x <= 99; ++x) {
    doc.rows.push_back({x, carrollian_doomsyear(x).value(),
                        proposed_doomsyear(split_year(x)).value()});
  }
  return doc;
}

TableDocument anchor_table() {
  TableDocument doc{"Zero-anchor years", {"zero_anchor"}, {}};
  for (const ZeroAnchor& a : derive_zero_anchors()) {
    doc.rows.push_back({a.label()});
  }
  return doc;
}

std::string render(const TableDocument& doc, Format format) {
  check_arity(doc);
  std::ostringstream os;
  auto texts = [](const std::vector<Cell>& row) {
    std::vector<std::string> out;
    out.reserve(row.size());
    for (const Cell& c : row) out.push_back(cell_text(c));
    return out;
  };

  if (format == Format::Tsv) {
    join(os, doc.header, "\t");
    os << '\n';
    for (const auto& row : doc.rows) {
      join(os, texts(row), "\t");
      os << '\n';
    }
    return os.str();
  }

  if (!doc.title.empty()) os << "### " << doc.title << "\n\n";
  os << "| ";
  join(os, doc.header, " | ");
  os << " |\n|";
  for (std::size_t i = 0; i < doc.header.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& row : doc.rows) {
    os << "| ";
    join(os, texts(row), " | ");
    os << " |\n";
  }
  return os.str();
}

}  // namespace doomsday::tables
