#include "drqsim/metrics.hpp"

#include <stdexcept>

namespace drqsim {

SimResult compute_metrics(const Workload& workload, const Schedule& schedule) {
  SimResult result{schedule, {}, {}};
  Time sum_tat = 0;
  Time sum_wt = 0;
  for (const auto& p : workload.processes()) {
    auto it = schedule.completion.find(p.id);
    if (it == schedule.completion.end()) throw std::invalid_argument("process " + p.id + " never completes");
    ProcMetrics m{p.id, p.arrival, p.burst, it->second, it->second - p.arrival, 0};
    m.waiting = m.turnaround - p.burst;
    sum_tat += m.turnaround;
    sum_wt += m.waiting;
    result.per_process.push_back(std::move(m));
  }
  const auto n = static_cast<Time>(workload.size());
  result.aggregates = {Rational(sum_tat, n), Rational(sum_wt, n), context_switches(schedule),
                       schedule.makespan()};
  return result;
}

Time fcfs_completion_analytic(const Workload& workload, std::size_t n) {
  if (n < 1 || n > workload.size()) throw std::invalid_argument("process index out of range");
  Time sum = 0;
  for (const auto& p : workload.processes())
    if (p.arrival != 0) throw std::invalid_argument("analytic FCFS completion needs all arrivals at 0");
  for (std::size_t m = 0; m < n; ++m) sum += workload[m].burst;
  return sum;
}

Rational improvement(Rational base, Rational candidate) {
  if (base.numerator() == 0) throw std::invalid_argument("improvement over a zero base");
  return (base - candidate) / base * 100;
}

}  // namespace drqsim
