#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drqsim/common.hpp"
#include "drqsim/policies.hpp"
#include "drqsim/workload.hpp"

namespace drqsim {

// One dispatch: id held the CPU over [start, end).
struct GanttSegment {
  std::string id;
  Time start = 0;
  Time end = 0;

  Time length() const { return end - start; }
  friend bool operator==(const GanttSegment&, const GanttSegment&) = default;
};

struct Schedule {
  std::vector<GanttSegment> segments;  // sorted by start, non-overlapping
  std::map<std::string, Time> completion;

  Time makespan() const;
  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct RoundEntry {
  std::string id;
  Time remaining_before = 0;
};

struct RoundLog {
  std::size_t round_index = 1;
  std::optional<Time> quantum;
  Time clock_at_start = 0;
  std::vector<RoundEntry> dispatches;
};

struct EngineTrace {
  std::vector<RoundLog> rounds;
};

struct SimulationRun {
  Schedule schedule;
  EngineTrace trace;
};

SimulationRun simulate(const Workload& workload, const PolicyConfig& config);

// Dispatch boundaries counted fence-post: segments + 1.
std::size_t context_switches(const Schedule& schedule);

}  // namespace drqsim
