#include "drqsim/engine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace drqsim {

Time Schedule::makespan() const {
  Time m = 0;
  for (const auto& [id, t] : completion) m = std::max(m, t);
  return m;
}

std::size_t context_switches(const Schedule& schedule) { return schedule.segments.size() + 1; }

SimulationRun simulate(const Workload& workload, const PolicyConfig& config) {
  auto policy = make_policy(config);
  const bool see_all = policy->sees_future_arrivals();
  const std::size_t n = workload.size();

  std::vector<Time> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = workload[i].burst;
  std::size_t unfinished = n;

  SimulationRun run;
  Time clock = 0;
  std::vector<ProcView> ready;
  ready.reserve(n);

  while (unfinished > 0) {
    ready.clear();
    Time next_arrival = std::numeric_limits<Time>::max();
    for (std::size_t i = 0; i < n; ++i) {
      if (remaining[i] == 0) continue;
      const auto& p = workload[i];
      if (see_all || p.arrival <= clock) ready.push_back({p.id, p.arrival, p.burst, remaining[i], 0, i});
      if (p.arrival > clock) next_arrival = std::min(next_arrival, p.arrival);
    }

    auto d = policy->next_dispatch(clock, ready);
    if (!d) {
      if (next_arrival == std::numeric_limits<Time>::max())
        throw std::logic_error("policy stalled with unfinished processes");
      clock = next_arrival;
      continue;
    }

    auto& rounds = run.trace.rounds;
    if (rounds.empty() || rounds.back().round_index != d->round_index)
      rounds.push_back({d->round_index, d->quantum, clock, {}});

    const std::size_t idx = *workload.index_of(d->id);
    const auto& proc = workload[idx];
    if (remaining[idx] == 0 || d->max_run < 1) throw std::logic_error("invalid dispatch of " + d->id);
    rounds.back().dispatches.push_back({proc.id, remaining[idx]});

    clock = std::max(clock, proc.arrival);
    const Time slice = std::min(d->max_run, remaining[idx]);
    run.schedule.segments.push_back({proc.id, clock, clock + slice});
    clock += slice;
    remaining[idx] -= slice;
    if (remaining[idx] == 0) {
      run.schedule.completion[proc.id] = clock;
      --unfinished;
    }
  }
  return run;
}

}  // namespace drqsim
