#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drqsim/engine.hpp"
#include "drqsim/metrics.hpp"
#include "drqsim/policies.hpp"
#include "drqsim/workload.hpp"

namespace drqsim {

enum class GanttStyle { ascii, svg };

// ascii: a row of "|ID " cells with boundary times underneath; idle gaps are
// blank cells. svg: one <rect> per segment, x proportional to time.
std::string render_gantt(const Schedule& schedule, GanttStyle style);

enum class ExportFormat { json, csv, markdown };

struct ResultLabels {
  std::string policy;
  std::string dataset;
};

std::string export_result(const SimResult& result, const ResultLabels& labels, ExportFormat format);

// Structured form of an exported JSON result. Averages stay as the exported
// two-decimal strings.
struct ResultDocument {
  std::string policy;
  std::string dataset;
  std::vector<ProcMetrics> processes;
  std::string avg_tat;
  std::string avg_wt;
  std::size_t ncs = 0;
  Time makespan = 0;
  std::vector<GanttSegment> gantt;

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

// Throws std::invalid_argument on malformed documents.
ResultDocument parse_result_json(std::string_view text);
ResultDocument to_document(const SimResult& result, const ResultLabels& labels);

struct Improvements {
  Rational tat;
  Rational wt;
  Rational ncs;
};

struct ComparisonRow {
  std::string dataset;
  Aggregates base;
  Aggregates candidate;
  Improvements improvement;
};

struct ComparisonReport {
  std::string base_policy;
  std::string candidate_policy;
  std::vector<ComparisonRow> rows;
  // Column means of the per-row improvements.
  Improvements summary;
};

ComparisonRow make_comparison_row(std::string dataset, const Aggregates& base, const Aggregates& candidate);

// Mean of each improvement column; throws std::invalid_argument on no rows.
Improvements summarize(const std::vector<ComparisonRow>& rows);

// Simulates both policies on every dataset (concurrently when there is more
// than one); rows keep dataset order.
ComparisonReport comparison_table(const std::vector<std::pair<std::string, Workload>>& datasets,
                                  const PolicyConfig& base, const PolicyConfig& candidate);

std::string render_comparison(const ComparisonReport& report, ExportFormat format);

}  // namespace drqsim
