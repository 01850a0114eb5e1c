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

#include "doomsday/verify.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "doomsday/doomsday.hpp"
#include "doomsday/oracle.hpp"

namespace doomsday {
namespace {

struct BlockResult {
  long long dates = 0;
  std::optional<Mismatch> mismatch;
};

BlockResult scan_years(int first, int last, const WeekdayFn& engine) {
  BlockResult result;
  CalendarDate date(first, 1, 1);
  const CalendarDate end(last, 12, 31);
  while (true) {
    ++result.dates;
    const Weekday expected = oracle::oracle_weekday(date);
    for (MethodId m : kAllMethods) {
      const Weekday got = engine(date, m);
      if (got != expected) {
        result.mismatch = Mismatch{date, m, got, expected};
        return result;
      }
    }
    if (date == end) break;
    date = oracle::next_day(date);
  }
  return result;
}

}  // namespace

VerifyReport verify_range(const VerifyOptions& options) {
  const int from = options.from_year;
  const int to = options.to_year;
  if (from < kMinYear || to > kMaxYear || from > to) {
    throw DomainError("verify range " + std::to_string(from) + ".." +
                      std::to_string(to) + " is not within 1..9999");
  }
  const WeekdayFn engine =
      options.engine ? options.engine
                     : WeekdayFn([](const CalendarDate& d, MethodId m) {
                         return day_of_week(d, m);
                       });

  const int years = to - from + 1;
  const int jobs = std::clamp(static_cast<int>(options.jobs), 1, years);
  const int per_block = (years + jobs - 1) / jobs;

  std::vector<BlockResult> results;
  std::vector<std::pair<int, int>> blocks;
  for (int y = from; y <= to; y += per_block) {
    blocks.emplace_back(y, std::min(to, y + per_block - 1));
  }
  results.resize(blocks.size());

  if (blocks.size() == 1) {
    results[0] = scan_years(blocks[0].first, blocks[0].second, engine);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      workers.emplace_back([&, i] {
        results[i] = scan_years(blocks[i].first, blocks[i].second, engine);
      });
    }
  }

  VerifyReport report;
  for (const BlockResult& r : results) {
    report.dates_checked += r.dates;
    if (r.mismatch) {
      report.first_mismatch = r.mismatch;
      break;
    }
  }
  return report;
}

}  // namespace doomsday
