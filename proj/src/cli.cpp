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

#include <CLI11.hpp>

#include <ostream>
#include <regex>

#include "doomsday/doomsday.hpp"
#include "doomsday/doomsyear.hpp"

namespace doomsday::cli {
namespace {

// Gregorian reform took effect the day after 1582-10-04 (Julian).
const CalendarDate kGregorianCivilStart(1582, 10, 15);

struct RawArgs {
  std::string date;
  std::string method = "decade-anchor";
  std::string table;
  std::string format = "tsv";
  std::optional<int> from;
  std::optional<int> to;
};

struct App {
  CLI::App app{"Day-of-week calculator built on the Doomsday rule",
               "doomsday"};
  CLI::App* dow = nullptr;
  CLI::App* explain = nullptr;
  CLI::App* tables = nullptr;
  CLI::App* anchors = nullptr;
  CLI::App* verify = nullptr;

  App(CliConfig& cfg, RawArgs& raw) {
    app.require_subcommand(1);

    const std::string method_help =
        "true | carrollian | decade-anchor | decade-anchor-lookup | "
        "conway-zero-anchor";

    dow = app.add_subcommand("dow", "Print the weekday of DATE");
    dow->add_option("date", raw.date, "YYYY-MM-DD or MM/DD/YYYY")->required();
    dow->add_option("-m,--method", raw.method, method_help);
    dow->add_flag("--numeric", cfg.numeric,
                  "Print the residue 0..6 (0 = Sunday)");

    explain = app.add_subcommand("explain", "Show every term of the sum");
    explain->add_option("date", raw.date, "YYYY-MM-DD or MM/DD/YYYY")
        ->required();
    explain->add_option("-m,--method", raw.method, method_help);

    tables = app.add_subcommand("tables", "Regenerate a lookup table");
    tables->add_option("table", raw.table, "1 | 2 | 3 | anchors")
        ->required()
        ->check(CLI::IsMember({"1", "2", "3", "anchors"}));
    tables->add_option("--format", raw.format, "tsv | markdown")
        ->check(CLI::IsMember({"tsv", "markdown"}));

    anchors = app.add_subcommand("anchors", "List the zero-anchor years");

    verify = app.add_subcommand(
        "verify", "Check every method against the day-count reference");
    verify->add_option("--from", raw.from, "First year (default 1583)");
    verify->add_option("--to", raw.to, "Last year (default 3000)");
    verify->add_option("-j,--jobs", cfg.jobs, "Worker threads")
        ->check(CLI::Range(1u, 256u));
  }
};

TableId table_id(const std::string& s) {
  if (s == "1") return TableId::One;
  if (s == "2") return TableId::Two;
  if (s == "3") return TableId::Three;
  return TableId::Anchors;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument(s);
  return v;
}

void print_trace(std::ostream& out, const Trace& t) {
  for (const TraceStep& s : t.steps) {
    out << s.label << ": " << s.display << '\n';
  }
  out << "result: " << Weekday(t.result).name() << " (" << t.result << ")\n";
}

void warn_if_pre_gregorian(const CalendarDate& d, std::ostream& err) {
  if (d < kGregorianCivilStart) {
    err << "warning: " << d.iso()
        << " predates Gregorian civil use (1582-10-15); computing "
           "proleptically\n";
  }
}

}  // namespace

CalendarDate parse_date_arg(std::string_view text) {
  static const std::regex iso(R"(^(\d{1,4})-(\d{1,2})-(\d{1,2})$)");
  static const std::regex us(R"(^(\d{1,2})/(\d{1,2})/(\d{1,4})$)");
  const std::string s(text);
  std::smatch m;
  int year = 0, month = 0, day = 0;
  if (std::regex_match(s, m, iso)) {
    year = to_int(m[1]);
    month = to_int(m[2]);
    day = to_int(m[3]);
  } else if (std::regex_match(s, m, us)) {
    month = to_int(m[1]);
    day = to_int(m[2]);
    year = to_int(m[3]);
  } else {
    throw UsageError("malformed date '" + s +
                     "' (expected YYYY-MM-DD or MM/DD/YYYY)");
  }
  try {
    return CalendarDate(year, month, day);
  } catch (const DomainError& e) {
    throw UsageError("invalid date '" + s + "': " + e.what());
  }
}

std::string usage() {
  CliConfig cfg;
  RawArgs raw;
  App a(cfg, raw);
  return a.app.help();
}

CliConfig parse_args(const std::vector<std::string>& args) {
  CliConfig cfg;
  RawArgs raw;
  App a(cfg, raw);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    a.app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    cfg.command = Command::Help;
    cfg.help_text = a.app.help();
    return cfg;
  } catch (const CLI::CallForAllHelp&) {
    cfg.command = Command::Help;
    cfg.help_text = a.app.help("", CLI::AppFormatMode::All);
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (a.dow->parsed() || a.explain->parsed()) {
    cfg.command = a.dow->parsed() ? Command::Dow : Command::Explain;
    cfg.date = parse_date_arg(raw.date);
    const auto method = parse_method(raw.method);
    if (!method) throw UsageError("unknown method '" + raw.method + "'");
    cfg.method = *method;
  } else if (a.tables->parsed()) {
    cfg.command = Command::Tables;
    cfg.table = table_id(raw.table);
    cfg.format =
        raw.format == "markdown" ? tables::Format::Markdown : tables::Format::Tsv;
  } else if (a.anchors->parsed()) {
    cfg.command = Command::Anchors;
  } else if (a.verify->parsed()) {
    cfg.command = Command::Verify;
    cfg.from_year = raw.from.value_or(1583);
    cfg.to_year = raw.to.value_or(3000);
    if (cfg.from_year < kMinYear || cfg.to_year > kMaxYear ||
        cfg.from_year > cfg.to_year) {
      throw UsageError("--from/--to must satisfy 1 <= from <= to <= 9999");
    }
  }
  return cfg;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err,
        const RunHooks& hooks) {
  switch (config.command) {
    case Command::Help:
      out << config.help_text;
      return kSuccess;

    case Command::Dow: {
      const CalendarDate& d = *config.date;
      warn_if_pre_gregorian(d, err);
      const Weekday w = day_of_week(d, config.method);
      if (config.numeric) {
        out << w.residue() << '\n';
      } else {
        out << w.name() << '\n';
      }
      return kSuccess;
    }

    case Command::Explain: {
      const CalendarDate& d = *config.date;
      warn_if_pre_gregorian(d, err);
      print_trace(out, explain(d, config.method));
      return kSuccess;
    }

    case Command::Tables: {
      tables::TableDocument doc;
      switch (config.table) {
        case TableId::One: doc = tables::table1(); break;
        case TableId::Two: doc = tables::table2(); break;
        case TableId::Three: doc = tables::table3(); break;
        case TableId::Anchors: doc = tables::anchor_table(); break;
      }
      out << tables::render(doc, config.format);
      return kSuccess;
    }

    case Command::Anchors: {
      bool first = true;
      for (const ZeroAnchor& a : derive_zero_anchors()) {
        out << (first ? "" : " ") << a.label();
        first = false;
      }
      out << '\n';
      return kSuccess;
    }

    case Command::Verify: {
      VerifyOptions opts;
      opts.from_year = config.from_year;
      opts.to_year = config.to_year;
      opts.jobs = config.jobs;
      opts.engine = hooks.engine;
      const VerifyReport report = verify_range(opts);
      if (const auto& mm = report.first_mismatch) {
        out << "MISMATCH " << mm->date.iso() << " method=" << mm->method
            << " got=" << mm->got.name() << " expected=" << mm->expected.name()
            << '\n';
        return kMismatch;
      }
      out << "OK " << report.dates_checked << " dates checked\n";
      return kSuccess;
    }
  }
  return kUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err, const RunHooks& hooks) {
  CliConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << usage();
    return kUsage;
  }
  return run(cfg, out, err, hooks);
}

}  // namespace doomsday::cli
