#include <sstream>

#include "doctest.h"
#include "drqsim/report.hpp"
#include "json.hpp"

using namespace drqsim;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> words(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

// Minimal well-formedness check: balanced, properly nested elements with
// quoted attributes, and a single root.
bool well_formed_xml(const std::string& doc) {
  std::vector<std::string> stack;
  std::size_t roots = 0;
  std::size_t i = 0;
  while ((i = doc.find('<', i)) != std::string::npos) {
    auto close = doc.find('>', i);
    if (close == std::string::npos) return false;
    std::string tag = doc.substr(i + 1, close - i - 1);
    i = close + 1;
    if (tag.empty()) return false;
    if (tag.front() == '?') continue;
    if (count_of(tag, "\"") % 2 != 0) return false;
    if (tag.front() == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    bool self_closing = tag.back() == '/';
    std::string name = tag.substr(0, tag.find_first_of(" /"));
    if (stack.empty()) ++roots;
    if (!self_closing) stack.push_back(name);
  }
  return stack.empty() && roots == 1;
}

SimResult run(const Workload& w, const PolicyConfig& cfg) { return compute_metrics(w, simulate(w, cfg).schedule); }

}  // namespace

TEST_CASE("ascii gantt for srr quantum 3") {
  auto s = simulate(bundled_dataset("table1"), PolicyConfig::srr(3)).schedule;
  auto lines = lines_of(render_gantt(s, GanttStyle::ascii));
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].rfind("|P4 |P5 |P3 |", 0) == 0);
  CHECK(words(lines[1]) ==
        std::vector<std::string>{"1", "4", "6", "9", "12", "15", "18", "21", "24", "27", "29", "32", "33"});
  // every boundary timestamp sits under its bar
  for (std::size_t c = 0; c < lines[1].size(); ++c)
    if (lines[1][c] != ' ' && (c == 0 || lines[1][c - 1] == ' ')) CHECK(lines[0][c] == '|');
}

TEST_CASE("ascii gantt: single segment and idle gap") {
  Schedule one{{{"A", 0, 7}}, {{"A", 7}}};
  auto lines = lines_of(render_gantt(one, GanttStyle::ascii));
  CHECK(lines[0] == "|A |");
  CHECK(words(lines[1]) == std::vector<std::string>{"0", "7"});

  Schedule gap{{{"A", 0, 2}, {"B", 5, 7}}, {{"A", 2}, {"B", 7}}};
  lines = lines_of(render_gantt(gap, GanttStyle::ascii));
  CHECK(lines[0] == "|A |   |B |");
  CHECK(words(lines[1]) == std::vector<std::string>{"0", "2", "5", "7"});
}

TEST_CASE("gantt for drq has eight labeled segments") {
  auto s = simulate(bundled_dataset("table1"), PolicyConfig::drq()).schedule;
  auto ascii = lines_of(render_gantt(s, GanttStyle::ascii));
  CHECK(count_of(ascii[0], "P") == 8);
  auto svg = render_gantt(s, GanttStyle::svg);
  CHECK(count_of(svg, "<rect") == 8);
  CHECK(count_of(svg, ">P3</text>") == 2);
  CHECK(well_formed_xml(svg));
}

TEST_CASE("svg gantt property: well-formed, one rect per segment") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto w = generate_workload({1 + seed % 20, seed, 100, 50});
    auto s = simulate(w, PolicyConfig::srr(1 + seed % 5)).schedule;
    auto svg = render_gantt(s, GanttStyle::svg);
    REQUIRE(well_formed_xml(svg));
    REQUIRE(count_of(svg, "<rect") == s.segments.size());
  }
  CHECK(!well_formed_xml("<svg><rect></svg>"));
}

TEST_CASE("export_result json follows the result schema") {
  auto w = bundled_dataset("table1");
  auto text = export_result(run(w, PolicyConfig::srr(3)), {"srr:3", "table1"}, ExportFormat::json);
  auto j = nlohmann::json::parse(text);
  CHECK(j["policy"] == "srr:3");
  CHECK(j["dataset"] == "table1");
  CHECK(j["aggregates"]["ncs"] == 13);
  CHECK(j["aggregates"]["avg_wt"] == "15.33");
  CHECK(j["aggregates"]["avg_tat"] == "20.67");
  CHECK(j["aggregates"]["makespan"] == 33);
  REQUIRE(j["processes"].size() == 6);
  CHECK(j["processes"][0]["id"] == "P1");
  CHECK(j["processes"][0]["waiting"] == 19);
  CHECK(j["processes"][0]["completion"] == 29);
  CHECK(j["gantt"].size() == 12);
  CHECK(j["gantt"][0] == nlohmann::json{{"id", "P4"}, {"start", 1}, {"end", 4}});
}

TEST_CASE("export_result json round-trips every field") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto w = generate_workload({1 + seed % 20, seed, 100, 50});
    auto r = run(w, PolicyConfig::drq());
    ResultLabels labels{"drq", "gen" + std::to_string(seed)};
    auto text = export_result(r, labels, ExportFormat::json);
    REQUIRE(parse_result_json(text) == to_document(r, labels));
  }
  CHECK_THROWS_AS(parse_result_json("{}"), std::invalid_argument);
}

TEST_CASE("export_result csv and markdown") {
  auto w = bundled_dataset("table1");
  auto r = run(w, PolicyConfig::srr(3));
  auto csv = lines_of(export_result(r, {"srr:3", "table1"}, ExportFormat::csv));
  REQUIRE(csv.size() == 1 + 6 + 4);
  CHECK(csv[0] == "id,arrival,burst,completion,turnaround,waiting");
  CHECK(csv[1] == "P1,5,5,29,24,19");
  CHECK(csv[7] == "avg_tat,20.67");
  CHECK(csv[8] == "avg_wt,15.33");
  CHECK(csv[9] == "ncs,13");
  CHECK(csv[10] == "makespan,33");

  auto md = export_result(r, {"srr:3", "table1"}, ExportFormat::markdown);
  CHECK(md.find("| P1 | 5 | 5 | 29 | 24 | 19 |") != std::string::npos);
  CHECK(md.find("| 20.67 | 15.33 | 13 | 33 |") != std::string::npos);
  CHECK(md.find("| P4 | 1 | 4 |") != std::string::npos);
}

TEST_CASE("comparison_table: single dataset row equals summary") {
  auto report = comparison_table({{"table1", bundled_dataset("table1")}}, PolicyConfig::srr(3), PolicyConfig::drq());
  REQUIRE(report.rows.size() == 1);
  const auto& row = report.rows[0];
  CHECK(row.base.avg_turnaround == Rational(124, 6));
  CHECK(row.base.avg_waiting == Rational(92, 6));
  CHECK(row.base.ncs == 13);
  CHECK(row.candidate.ncs == 9);
  CHECK(row.improvement.ncs == Rational(400, 13));
  CHECK(format_fixed2(row.improvement.ncs) == "30.77");
  CHECK(report.summary.tat == row.improvement.tat);
  CHECK(report.summary.wt == row.improvement.wt);
  CHECK(report.summary.ncs == row.improvement.ncs);
  CHECK(row.improvement.tat == improvement(row.base.avg_turnaround, row.candidate.avg_turnaround));
}

TEST_CASE("comparison_table preserves dataset order and summary is recomputable") {
  std::vector<std::pair<std::string, Workload>> sets;
  for (const auto& id : {"ds10", "ds1", "ds7", "table1", "ds3"}) sets.emplace_back(id, bundled_dataset(id));
  auto report = comparison_table(sets, PolicyConfig::srr(3), PolicyConfig::drq());
  REQUIRE(report.rows.size() == sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    CHECK(report.rows[i].dataset == sets[i].first);
    auto b = compute_metrics(sets[i].second, simulate(sets[i].second, PolicyConfig::srr(3)).schedule).aggregates;
    CHECK(report.rows[i].base == b);
  }
  auto again = summarize(report.rows);
  CHECK(again.tat == report.summary.tat);
  CHECK(again.wt == report.summary.wt);
  CHECK(again.ncs == report.summary.ncs);
  CHECK_THROWS_AS(comparison_table({}, PolicyConfig::srr(3), PolicyConfig::drq()), std::invalid_argument);
}

TEST_CASE("summarize averages per-row percentages") {
  // Published TAT-improvement column; its mean is published as 18.80.
  const std::vector<std::string> published{"17.24", "10.63", "23.91", "1.96",  "14.86",
                                           "25.76", "14.53", "20.39", "25.84", "32.9"};
  std::vector<ComparisonRow> rows;
  for (const auto& v : published) rows.push_back({"x", {}, {}, {parse_decimal(v), Rational(0), Rational(0)}});
  CHECK(format_fixed2(summarize(rows).tat) == "18.80");
}

TEST_CASE("render_comparison formats") {
  auto report = comparison_table({{"table1", bundled_dataset("table1")}}, PolicyConfig::srr(3), PolicyConfig::drq());
  auto md = render_comparison(report, ExportFormat::markdown);
  CHECK(md.find("| table1 |") != std::string::npos);
  CHECK(md.find("| Average |") != std::string::npos);
  CHECK(md.find("| 30.77 |") != std::string::npos);
  auto csv = lines_of(render_comparison(report, ExportFormat::csv));
  REQUIRE(csv.size() == 3);
  CHECK(csv[1].rfind("table1,", 0) == 0);
  CHECK(csv[2].rfind("Average,", 0) == 0);
  auto j = nlohmann::json::parse(render_comparison(report, ExportFormat::json));
  CHECK(j["rows"][0]["base"]["ncs"] == 13);
  CHECK(j["rows"][0]["improvement"]["ncs"] == "30.77");
  CHECK(j["summary"]["ncs"] == "30.77");
}
