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

#include "doomsday/cli.hpp"

#include <sstream>

#include "doomsday/doomsday.hpp"
#include "gtest/gtest.h"

namespace doomsday::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const RunHooks& hooks = {}) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

TEST(ParseDateArgTest, BothForms) {
  EXPECT_EQ(parse_date_arg("1974-04-04"), CalendarDate(1974, 4, 4));
  EXPECT_EQ(parse_date_arg("04/04/1974"), CalendarDate(1974, 4, 4));
  EXPECT_EQ(parse_date_arg("4/4/1974"), CalendarDate(1974, 4, 4));
}

TEST(ParseDateArgTest, Rejects) {
  EXPECT_THROW(parse_date_arg("02/29/1900"), UsageError);
  EXPECT_THROW(parse_date_arg("02/30/2001"), UsageError);
  EXPECT_THROW(parse_date_arg("1974/04/04"), UsageError);
  EXPECT_THROW(parse_date_arg("yesterday"), UsageError);
  EXPECT_THROW(parse_date_arg(""), UsageError);
}

TEST(DowTest, PrintsName) {
  const Result r = invoke({"dow", "2010-04-04"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Sunday\n");
  EXPECT_EQ(r.err, "");
}

TEST(DowTest, Numeric) {
  const Result r = invoke({"dow", "04/04/1974", "--numeric"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4\n");
}

TEST(DowTest, SameForEveryMethod) {
  for (const char* m : {"true", "carrollian", "decade-anchor",
                        "decade-anchor-lookup", "conway-zero-anchor",
                        "ConwayZeroAnchor"}) {
    const Result r = invoke({"dow", "1998-12-25", "--method", m});
    EXPECT_EQ(r.code, 0) << m;
    EXPECT_EQ(r.out, "Friday\n") << m;
  }
}

TEST(DowTest, WarnsBeforeGregorianAdoption) {
  const Result r = invoke({"dow", "1500-01-01"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Monday\n");
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(line_count(r.err), 1u);

  EXPECT_EQ(invoke({"dow", "1582-10-15"}).err, "");
  EXPECT_NE(invoke({"dow", "1582-10-14"}).err, "");
}

TEST(ExplainCmdTest, PrintsSteps) {
  const Result r = invoke({"explain", "1988-08-08"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("doomsyear.sum: 26\n"), std::string::npos);
  EXPECT_NE(r.out.find("doomscentury: 3\n"), std::string::npos);
  const std::string last = "result: Monday (1)\n";
  ASSERT_GE(r.out.size(), last.size());
  EXPECT_EQ(r.out.substr(r.out.size() - last.size()), last);
}

TEST(ExplainCmdTest, ConwayHalfAnchor) {
  const Result r = invoke({"explain", "1998-12-25", "-m", "conway-zero-anchor"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("doomsyear.zero_anchor: 95.5\n"), std::string::npos);
  EXPECT_NE(r.out.find("doomsyear.anchor_adjustment: -1\n"),
            std::string::npos);
}

TEST(TablesCmdTest, Table3Tsv) {
  const Result r = invoke({"tables", "3", "--format", "tsv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(line_count(r.out), 101u);
  EXPECT_NE(r.out.find("\n74\t1\t1\n"), std::string::npos);
}

TEST(TablesCmdTest, Markdown) {
  const Result r = invoke({"tables", "1", "--format", "markdown"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| 5 | 50's | 20 | 6 |"), std::string::npos);
}

TEST(TablesCmdTest, Anchors) {
  const Result r = invoke({"tables", "anchors"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(line_count(r.out), 19u);
}

TEST(AnchorsCmdTest, SpaceSeparated) {
  const Result r = invoke({"anchors"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "0 6 11.5 17 23 28 34 39.5 45 51 56 62 67.5 73 79 84 90 95.5\n");
}

TEST(VerifyCmdTest, Decade) {
  const Result r = invoke({"verify", "--from", "1990", "--to", "1999"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "OK 3652 dates checked\n");
}

TEST(VerifyCmdTest, JobsDoNotChangeOutput) {
  const Result one = invoke({"verify", "--from", "1600", "--to", "2400"});
  const Result many =
      invoke({"verify", "--from", "1600", "--to", "2400", "--jobs", "7"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, many.out);
}

// Carrollian off by one in the 1950s and 2000s.
Weekday corrupted(const CalendarDate& d, MethodId m) {
  Weekday w = day_of_week(d, m);
  if (m == MethodId::Carrollian &&
      ((d.year() >= 1950 && d.year() < 1960) || d.year() >= 2000)) {
    return Weekday(w.residue() + reduce_mod7(1));
  }
  return w;
}

TEST(VerifyCmdTest, CorruptedEngineReportsEarliestMismatch) {
  RunHooks hooks{corrupted};
  for (const char* jobs : {"1", "3", "16"}) {
    const Result r = invoke({"verify", "--jobs", jobs}, hooks);
    EXPECT_EQ(r.code, 1) << jobs;
    EXPECT_EQ(r.out,
              "MISMATCH 1950-01-01 method=Carrollian got=Monday "
              "expected=Sunday\n")
        << jobs;
  }
}

TEST(UsageTest, Errors) {
  for (std::vector<std::string> args :
       std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"dow"},
           {"dow", "02/30/2001"},
           {"dow", "2001-01-01", "--method", "walters"},
           {"dow", "2001-01-01", "--bogus"},
           {"tables", "4"},
           {"tables", "1", "--format", "html"},
           {"verify", "--from", "2000", "--to", "1999"},
           {"verify", "--from", "0"},
       }) {
    const Result r = invoke(args);
    EXPECT_EQ(r.code, 2) << testing::PrintToString(args);
    EXPECT_EQ(r.out, "");
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
  }
}

TEST(UsageTest, HelpGoesToStdout) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
  EXPECT_EQ(r.err, "");
}

}  // namespace
}  // namespace doomsday::cli
