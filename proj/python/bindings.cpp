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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "doomsday/cli.hpp"
#include "doomsday/doomsday.hpp"
#include "doomsday/doomsyear.hpp"
#include "doomsday/oracle.hpp"
#include "doomsday/tables.hpp"
#include "doomsday/verify.hpp"

namespace py = pybind11;
namespace dd = doomsday;

namespace {

dd::SplitYear digits(int y, int z) { return dd::SplitYear{y, z}; }

py::object mismatch_to_py(const std::optional<dd::Mismatch>& m) {
  if (!m) return py::none();
  py::dict d;
  d["date"] = m->date;
  d["method"] = m->method;
  d["got"] = m->got;
  d["expected"] = m->expected;
  return d;
}

}  // namespace

PYBIND11_MODULE(_doomsday, m) {
  m.doc() = "Doomsday-rule day-of-week engine";

  py::enum_<dd::MethodId>(m, "Method")
      .value("TRUE", dd::MethodId::True)
      .value("CARROLLIAN", dd::MethodId::Carrollian)
      .value("DECADE_ANCHOR", dd::MethodId::DecadeAnchor)
      .value("DECADE_ANCHOR_LOOKUP", dd::MethodId::DecadeAnchorLookup)
      .value("CONWAY_ZERO_ANCHOR", dd::MethodId::ConwayZeroAnchor);

  m.def("all_methods", [] {
    return std::vector<dd::MethodId>(dd::kAllMethods.begin(),
                                     dd::kAllMethods.end());
  });
  m.def("parse_method", [](std::string_view text) {
    auto id = dd::parse_method(text);
    if (!id) throw py::value_error("unknown method '" + std::string(text) + "'");
    return *id;
  });
  m.def("method_name", [](dd::MethodId id) {
    return std::string(dd::method_name(id));
  });

  py::class_<dd::CalendarDate>(m, "CalendarDate")
      .def(py::init<int, int, int>(), py::arg("year"), py::arg("month"),
           py::arg("day"))
      .def_property_readonly("year", &dd::CalendarDate::year)
      .def_property_readonly("month", &dd::CalendarDate::month)
      .def_property_readonly("day", &dd::CalendarDate::day)
      .def("iso", &dd::CalendarDate::iso)
      .def("__eq__", [](const dd::CalendarDate& a,
                        const dd::CalendarDate& b) { return a == b; })
      .def("__lt__", [](const dd::CalendarDate& a,
                        const dd::CalendarDate& b) { return a < b; })
      .def("__hash__", [](const dd::CalendarDate& d) {
        return py::hash(py::make_tuple(d.year(), d.month(), d.day()));
      })
      .def("__repr__", [](const dd::CalendarDate& d) {
        return "CalendarDate('" + d.iso() + "')";
      });

  py::class_<dd::Weekday>(m, "Weekday")
      .def_property_readonly("residue",
                             [](dd::Weekday w) { return w.residue().value(); })
      .def_property_readonly("name",
                             [](dd::Weekday w) { return std::string(w.name()); })
      .def("__eq__", [](dd::Weekday a, dd::Weekday b) { return a == b; })
      .def("__repr__", [](dd::Weekday w) {
        return "Weekday('" + std::string(w.name()) + "')";
      });

  py::class_<dd::TraceStep>(m, "TraceStep")
      .def_readonly("label", &dd::TraceStep::label)
      .def_readonly("value", &dd::TraceStep::value)
      .def_readonly("display", &dd::TraceStep::display)
      .def("__repr__", [](const dd::TraceStep& s) {
        return s.label + ": " + s.display;
      });

  py::class_<dd::Trace>(m, "Trace")
      .def_readonly("method", &dd::Trace::method)
      .def_readonly("steps", &dd::Trace::steps)
      .def_property_readonly("result",
                             [](const dd::Trace& t) { return t.result.value(); })
      .def("step", [](const dd::Trace& t, std::string_view label) {
        const dd::TraceStep* s = t.find(label);
        if (!s) throw py::key_error(std::string(label));
        return *s;
      });

  py::class_<dd::ZeroAnchor>(m, "ZeroAnchor")
      .def_readonly("base_year", &dd::ZeroAnchor::base_year)
      .def_readonly("is_half", &dd::ZeroAnchor::is_half)
      .def("label", &dd::ZeroAnchor::label)
      .def("__repr__", [](const dd::ZeroAnchor& a) {
        return "ZeroAnchor(" + a.label() + ")";
      });

  // core
  m.def("split_year", [](int x) {
    auto s = dd::split_year(x);
    return py::make_tuple(s.y, s.z);
  });
  m.def("split_century", [](int year) {
    auto s = dd::split_century(year);
    return py::make_tuple(s.cc, s.yy);
  });
  m.def("reduce_mod7", [](long long n) { return dd::reduce_mod7(n).value(); });
  m.def("is_leap_year", &dd::is_leap_year);

  // doomsyear
  m.def("true_doomsyear", [](int x) { return dd::true_doomsyear(x).value(); });
  m.def("carrollian_doomsyear",
        [](int x) { return dd::carrollian_doomsyear(x).value(); });
  m.def("leaps_formula",
        [](int y, int z) { return dd::leaps_formula(digits(y, z)).count(); });
  m.def("leaps_by_counting", [](int y, int z) {
    return dd::leaps_by_counting(digits(y, z)).count();
  });
  m.def("leaps_table", [](int z, bool y_is_odd) {
    return dd::leaps_table(z, y_is_odd).count();
  });
  m.def("decade_anchor", [](int y) { return dd::decade_anchor(y).value(); });
  m.def("proposed_doomsyear", [](int y, int z) {
    return dd::proposed_doomsyear(digits(y, z)).value();
  });
  m.def("proposed_doomsyear_lookup", [](int y, int z) {
    return dd::proposed_doomsyear_lookup(digits(y, z)).value();
  });
  m.def("derive_zero_anchors", [] {
    auto span = dd::derive_zero_anchors();
    return std::vector<dd::ZeroAnchor>(span.begin(), span.end());
  });
  m.def("conway_doomsyear",
        [](int x) { return dd::conway_doomsyear(x).value(); });
  m.def("doomsyear",
        [](int x, dd::MethodId method) { return dd::doomsyear(x, method).value(); },
        py::arg("x"), py::arg("method") = dd::MethodId::DecadeAnchor);
  m.def("doomsyear_trace", &dd::doomsyear_trace, py::arg("x"),
        py::arg("method") = dd::MethodId::DecadeAnchor);

  // doomsday
  m.def("doomscentury", [](int cc) { return dd::doomscentury(cc).value(); });
  m.def("month_anchor", &dd::month_anchor, py::arg("month"), py::arg("leap"));
  m.def("doomsmonth",
        [](int month, int day, bool leap) {
          return dd::doomsmonth(month, day, leap).value();
        },
        py::arg("month"), py::arg("day"), py::arg("leap"));
  m.def("day_of_week", &dd::day_of_week, py::arg("date"),
        py::arg("method") = dd::MethodId::DecadeAnchor);
  m.def("explain", &dd::explain, py::arg("date"),
        py::arg("method") = dd::MethodId::DecadeAnchor);

  // oracle
  m.def("rata_die",
        [](const dd::CalendarDate& d) { return dd::oracle::rata_die(d).value; });
  m.def("from_day_number", [](long long n) {
    return dd::oracle::from_day_number(dd::oracle::DayNumber{n});
  });
  m.def("oracle_weekday", &dd::oracle::oracle_weekday);
  m.def("next_day", &dd::oracle::next_day);

  // tables
  m.def("render_table",
        [](const std::string& which, const std::string& format) {
          dd::tables::TableDocument doc;
          if (which == "1") doc = dd::tables::table1();
          else if (which == "2") doc = dd::tables::table2();
          else if (which == "3") doc = dd::tables::table3();
          else if (which == "anchors") doc = dd::tables::anchor_table();
          else throw py::value_error("table must be 1, 2, 3 or anchors");
          dd::tables::Format f;
          if (format == "tsv") f = dd::tables::Format::Tsv;
          else if (format == "markdown") f = dd::tables::Format::Markdown;
          else throw py::value_error("format must be tsv or markdown");
          return dd::tables::render(doc, f);
        },
        py::arg("which"), py::arg("format") = "tsv");

  // verification
  m.def("verify",
        [](int from_year, int to_year, unsigned jobs) {
          dd::VerifyOptions opts;
          opts.from_year = from_year;
          opts.to_year = to_year;
          opts.jobs = jobs;
          dd::VerifyReport r;
          {
            py::gil_scoped_release release;
            r = dd::verify_range(opts);
          }
          return py::make_tuple(r.dates_checked,
                                mismatch_to_py(r.first_mismatch));
        },
        py::arg("from_year") = 1583, py::arg("to_year") = 3000,
        py::arg("jobs") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = dd::cli::main_entry(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
