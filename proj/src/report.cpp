#include "drqsim/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace drqsim {

namespace {

using ojson = nlohmann::ordered_json;

std::string render_ascii(const Schedule& schedule) {
  std::string bars;
  std::string times;
  auto cell = [&](const std::string& label, Time boundary) {
    std::string stamp = std::to_string(boundary);
    std::size_t width = std::max(label.size() + 1, stamp.size() + 1);
    if (label.empty()) width = std::max<std::size_t>(width, 3);
    bars += '|';
    bars += label;
    bars.append(width - label.size(), ' ');
    times += stamp;
    times.append(width + 1 - stamp.size(), ' ');
  };

  const auto& segs = schedule.segments;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (i > 0 && segs[i].start > segs[i - 1].end) cell("", segs[i - 1].end);
    cell(segs[i].id, segs[i].start);
  }
  if (!segs.empty()) {
    bars += '|';
    times += std::to_string(segs.back().end);
  }
  while (!times.empty() && times.back() == ' ') times.pop_back();
  return bars + "\n" + times + "\n";
}

std::string fmt_px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string render_svg(const Schedule& schedule) {
  constexpr std::array<const char*, 8> palette{"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                               "#59a14f", "#edc948", "#b07aa1", "#ff9da7"};
  const auto& segs = schedule.segments;
  const Time origin = segs.empty() ? 0 : segs.front().start;
  const Time finish = segs.empty() ? 0 : segs.back().end;
  const Time span = std::max<Time>(finish - origin, 1);
  const double scale = std::clamp(1200.0 / static_cast<double>(span), 1.0, 24.0);
  const double margin = 20.0;
  const double width = margin * 2 + scale * static_cast<double>(span);

  std::map<std::string, std::size_t> colour;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_px(width) << "\" height=\"90\">\n";
  auto x_of = [&](Time t) { return margin + scale * static_cast<double>(t - origin); };
  for (const auto& s : segs) {
    auto [it, inserted] = colour.emplace(s.id, colour.size());
    const double x = x_of(s.start);
    const double w = scale * static_cast<double>(s.length());
    out << "  <rect x=\"" << fmt_px(x) << "\" y=\"20\" width=\"" << fmt_px(w)
        << "\" height=\"30\" fill=\"" << palette[it->second % palette.size()] << "\" stroke=\"#000\"/>\n";
    out << "  <text x=\"" << fmt_px(x + w / 2) << "\" y=\"40\" font-size=\"11\" text-anchor=\"middle\">"
        << s.id << "</text>\n";
  }
  // Boundary labels, one per distinct time.
  std::vector<Time> marks;
  for (const auto& s : segs) {
    marks.push_back(s.start);
    marks.push_back(s.end);
  }
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  for (Time t : marks)
    out << "  <text x=\"" << fmt_px(x_of(t)) << "\" y=\"66\" font-size=\"10\" text-anchor=\"middle\">" << t
        << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

ojson aggregates_json(const Aggregates& a) {
  return {{"avg_tat", format_fixed2(a.avg_turnaround)},
          {"avg_wt", format_fixed2(a.avg_waiting)},
          {"ncs", a.ncs},
          {"makespan", a.makespan}};
}

ojson document_json(const ResultDocument& doc) {
  ojson procs = ojson::array();
  for (const auto& p : doc.processes)
    procs.push_back({{"id", p.id},
                     {"arrival", p.arrival},
                     {"burst", p.burst},
                     {"completion", p.completion},
                     {"turnaround", p.turnaround},
                     {"waiting", p.waiting}});
  ojson gantt = ojson::array();
  for (const auto& s : doc.gantt) gantt.push_back({{"id", s.id}, {"start", s.start}, {"end", s.end}});
  return {{"policy", doc.policy},
          {"dataset", doc.dataset},
          {"processes", procs},
          {"aggregates",
           {{"avg_tat", doc.avg_tat}, {"avg_wt", doc.avg_wt}, {"ncs", doc.ncs}, {"makespan", doc.makespan}}},
          {"gantt", gantt}};
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string line = "|";
  for (const auto& c : cells) line += " " + c + " |";
  return line + "\n";
}

std::string md_rule(std::size_t columns) {
  std::string line = "|";
  for (std::size_t i = 0; i < columns; ++i) line += "---|";
  return line + "\n";
}

std::string join_csv(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? "," : "") + cells[i];
  return line + "\n";
}

}  // namespace

std::string render_gantt(const Schedule& schedule, GanttStyle style) {
  return style == GanttStyle::ascii ? render_ascii(schedule) : render_svg(schedule);
}

ResultDocument to_document(const SimResult& result, const ResultLabels& labels) {
  const auto& a = result.aggregates;
  return {labels.policy,
          labels.dataset,
          result.per_process,
          format_fixed2(a.avg_turnaround),
          format_fixed2(a.avg_waiting),
          a.ncs,
          a.makespan,
          result.schedule.segments};
}

std::string export_result(const SimResult& result, const ResultLabels& labels, ExportFormat format) {
  const ResultDocument doc = to_document(result, labels);
  switch (format) {
    case ExportFormat::json:
      return document_json(doc).dump(2) + "\n";
    case ExportFormat::csv: {
      std::string out = "id,arrival,burst,completion,turnaround,waiting\n";
      for (const auto& p : doc.processes)
        out += join_csv({p.id, std::to_string(p.arrival), std::to_string(p.burst), std::to_string(p.completion),
                         std::to_string(p.turnaround), std::to_string(p.waiting)});
      out += "avg_tat," + doc.avg_tat + "\n";
      out += "avg_wt," + doc.avg_wt + "\n";
      out += "ncs," + std::to_string(doc.ncs) + "\n";
      out += "makespan," + std::to_string(doc.makespan) + "\n";
      return out;
    }
    case ExportFormat::markdown: {
      std::string out = "## " + doc.policy + " on " + doc.dataset + "\n\n";
      out += md_row({"id", "arrival", "burst", "completion", "turnaround", "waiting"});
      out += md_rule(6);
      for (const auto& p : doc.processes)
        out += md_row({p.id, std::to_string(p.arrival), std::to_string(p.burst), std::to_string(p.completion),
                       std::to_string(p.turnaround), std::to_string(p.waiting)});
      out += "\n";
      out += md_row({"avg_tat", "avg_wt", "ncs", "makespan"});
      out += md_rule(4);
      out += md_row({doc.avg_tat, doc.avg_wt, std::to_string(doc.ncs), std::to_string(doc.makespan)});
      out += "\n";
      out += md_row({"id", "start", "end"});
      out += md_rule(3);
      for (const auto& s : doc.gantt) out += md_row({s.id, std::to_string(s.start), std::to_string(s.end)});
      return out;
    }
  }
  return {};
}

ResultDocument parse_result_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    ResultDocument doc;
    doc.policy = j.at("policy").get<std::string>();
    doc.dataset = j.at("dataset").get<std::string>();
    for (const auto& p : j.at("processes"))
      doc.processes.push_back({p.at("id").get<std::string>(), p.at("arrival").get<Time>(), p.at("burst").get<Time>(),
                               p.at("completion").get<Time>(), p.at("turnaround").get<Time>(),
                               p.at("waiting").get<Time>()});
    const auto& a = j.at("aggregates");
    doc.avg_tat = a.at("avg_tat").get<std::string>();
    doc.avg_wt = a.at("avg_wt").get<std::string>();
    doc.ncs = a.at("ncs").get<std::size_t>();
    doc.makespan = a.at("makespan").get<Time>();
    for (const auto& s : j.at("gantt"))
      doc.gantt.push_back({s.at("id").get<std::string>(), s.at("start").get<Time>(), s.at("end").get<Time>()});
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed result document: ") + e.what());
  }
}

ComparisonRow make_comparison_row(std::string dataset, const Aggregates& base, const Aggregates& candidate) {
  Improvements imp{improvement(base.avg_turnaround, candidate.avg_turnaround),
                   improvement(base.avg_waiting, candidate.avg_waiting),
                   improvement(Rational(static_cast<Time>(base.ncs)), Rational(static_cast<Time>(candidate.ncs)))};
  return {std::move(dataset), base, candidate, imp};
}

Improvements summarize(const std::vector<ComparisonRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("comparison needs at least one dataset");
  Improvements sum{};
  for (const auto& r : rows) {
    sum.tat += r.improvement.tat;
    sum.wt += r.improvement.wt;
    sum.ncs += r.improvement.ncs;
  }
  const auto n = static_cast<Time>(rows.size());
  return {sum.tat / n, sum.wt / n, sum.ncs / n};
}

ComparisonReport comparison_table(const std::vector<std::pair<std::string, Workload>>& datasets,
                                  const PolicyConfig& base, const PolicyConfig& candidate) {
  if (datasets.empty()) throw std::invalid_argument("comparison needs at least one dataset");
  base.validate();
  candidate.validate();

  auto row_for = [&](const std::pair<std::string, Workload>& ds) {
    const auto& [name, workload] = ds;
    auto b = compute_metrics(workload, simulate(workload, base).schedule);
    auto c = compute_metrics(workload, simulate(workload, candidate).schedule);
    return make_comparison_row(name, b.aggregates, c.aggregates);
  };

  ComparisonReport report{base.label(), candidate.label(), {}, {}};
  if (datasets.size() == 1) {
    report.rows.push_back(row_for(datasets.front()));
  } else {
    std::vector<std::future<ComparisonRow>> jobs;
    jobs.reserve(datasets.size());
    for (const auto& ds : datasets) jobs.push_back(std::async(std::launch::async, row_for, std::cref(ds)));
    for (auto& j : jobs) report.rows.push_back(j.get());
  }
  report.summary = summarize(report.rows);
  return report;
}

std::string render_comparison(const ComparisonReport& report, ExportFormat format) {
  // Means of the aggregate columns, shown beside the improvement summary.
  Rational c_tat, c_wt, c_ncs, b_tat, b_wt, b_ncs;
  for (const auto& r : report.rows) {
    c_tat += r.candidate.avg_turnaround;
    c_wt += r.candidate.avg_waiting;
    c_ncs += static_cast<Time>(r.candidate.ncs);
    b_tat += r.base.avg_turnaround;
    b_wt += r.base.avg_waiting;
    b_ncs += static_cast<Time>(r.base.ncs);
  }
  const auto n = static_cast<Time>(std::max<std::size_t>(report.rows.size(), 1));
  const auto f = [](Rational v) { return format_fixed2(v); };

  auto cells = [&](const ComparisonRow& r) {
    return std::vector<std::string>{r.dataset,
                                    f(r.candidate.avg_turnaround),
                                    f(r.candidate.avg_waiting),
                                    std::to_string(r.candidate.ncs),
                                    f(r.base.avg_turnaround),
                                    f(r.base.avg_waiting),
                                    std::to_string(r.base.ncs),
                                    f(r.improvement.tat),
                                    f(r.improvement.wt),
                                    f(r.improvement.ncs)};
  };
  const std::vector<std::string> average{"Average",       f(c_tat / n),           f(c_wt / n),
                                         f(c_ncs / n),    f(b_tat / n),           f(b_wt / n),
                                         f(b_ncs / n),    f(report.summary.tat),  f(report.summary.wt),
                                         f(report.summary.ncs)};

  switch (format) {
    case ExportFormat::markdown: {
      const std::string& c = report.candidate_policy;
      const std::string& b = report.base_policy;
      std::string out = "## " + c + " vs " + b + "\n\n";
      out += md_row({"Dataset", c + " TAT", c + " WT", c + " NCS", b + " TAT", b + " WT", b + " NCS", "% TAT",
                     "% WT", "% NCS"});
      out += md_rule(10);
      for (const auto& r : report.rows) out += md_row(cells(r));
      out += md_row(average);
      return out;
    }
    case ExportFormat::csv: {
      std::string out = "dataset,candidate_tat,candidate_wt,candidate_ncs,base_tat,base_wt,base_ncs,"
                        "improvement_tat,improvement_wt,improvement_ncs\n";
      for (const auto& r : report.rows) out += join_csv(cells(r));
      out += join_csv(average);
      return out;
    }
    case ExportFormat::json: {
      ojson rows = ojson::array();
      for (const auto& r : report.rows)
        rows.push_back({{"dataset", r.dataset},
                        {"candidate", aggregates_json(r.candidate)},
                        {"base", aggregates_json(r.base)},
                        {"improvement",
                         {{"tat", f(r.improvement.tat)}, {"wt", f(r.improvement.wt)}, {"ncs", f(r.improvement.ncs)}}}});
      ojson doc{{"base_policy", report.base_policy},
                {"candidate_policy", report.candidate_policy},
                {"rows", rows},
                {"summary", {{"tat", f(report.summary.tat)}, {"wt", f(report.summary.wt)}, {"ncs", f(report.summary.ncs)}}}};
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace drqsim
