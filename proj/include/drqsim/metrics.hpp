#pragma once

#include <string>
#include <vector>

#include "drqsim/common.hpp"
#include "drqsim/engine.hpp"
#include "drqsim/workload.hpp"

namespace drqsim {

struct ProcMetrics {
  std::string id;
  Time arrival = 0;
  Time burst = 0;
  Time completion = 0;
  Time turnaround = 0;  // completion - arrival
  Time waiting = 0;     // turnaround - burst

  friend bool operator==(const ProcMetrics&, const ProcMetrics&) = default;
};

struct Aggregates {
  Rational avg_turnaround;
  Rational avg_waiting;
  std::size_t ncs = 0;
  Time makespan = 0;

  friend bool operator==(const Aggregates&, const Aggregates&) = default;
};

struct SimResult {
  Schedule schedule;
  std::vector<ProcMetrics> per_process;  // workload order
  Aggregates aggregates;
};

// Throws std::invalid_argument if the schedule does not complete every
// process of the workload.
SimResult compute_metrics(const Workload& workload, const Schedule& schedule);

// Completion time of the n-th process (1-based) under FCFS with every
// process queued at time 0: the sum of the first n bursts. Throws
// std::invalid_argument on a nonzero arrival or an out-of-range n.
Time fcfs_completion_analytic(const Workload& workload, std::size_t n);

// (base - candidate) / base * 100. Throws std::invalid_argument if base == 0.
Rational improvement(Rational base, Rational candidate);

}  // namespace drqsim
