#include "drqsim/oracle.hpp"

#include <optional>
#include <stdexcept>

namespace drqsim {

namespace {

struct Choice {
  std::size_t index;
  Time slice;
};

struct TickState {
  const Workload& workload;
  const PolicyConfig& config;
  Time clock = 0;
  std::vector<Time> remaining;

  // srr
  std::vector<bool> served;
  bool rotation_started = false;

  // drq
  std::size_t round = 0;
  Time tq = 0;
  std::vector<std::size_t> plan;
  std::size_t cursor = 0;
  std::vector<Time> trq;

  TickState(const Workload& w, const PolicyConfig& c)
      : workload(w), config(c), remaining(w.size()), served(w.size(), false), trq(w.size(), 0) {
    for (std::size_t i = 0; i < w.size(); ++i) remaining[i] = w[i].burst;
  }

  bool live(std::size_t i) const { return remaining[i] > 0; }
  bool arrived(std::size_t i) const { return workload[i].arrival <= clock; }

  // Earliest-arrival live, arrived process, ties by workload position.
  std::optional<std::size_t> first_arrived(bool skip_served) const {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < workload.size(); ++i) {
      if (!live(i) || !arrived(i) || (skip_served && served[i])) continue;
      if (!best || workload[i].arrival < workload[*best].arrival) best = i;
    }
    return best;
  }

  std::optional<Choice> decide() {
    switch (config.kind) {
      case PolicyKind::fcfs: {
        auto i = first_arrived(false);
        if (!i) return std::nullopt;
        return Choice{*i, remaining[*i]};
      }
      case PolicyKind::srr: {
        auto i = rotation_started ? first_arrived(true) : std::nullopt;
        if (!i) {
          i = first_arrived(false);
          if (!i) return std::nullopt;
          served.assign(served.size(), false);
          rotation_started = true;
        }
        served[*i] = true;
        return Choice{*i, config.fixed_quantum};
      }
      case PolicyKind::drq:
        return decide_drq();
    }
    return std::nullopt;
  }

  std::optional<Choice> decide_drq() {
    while (cursor < plan.size() && !live(plan[cursor])) ++cursor;
    if (cursor == plan.size()) {
      std::vector<std::size_t> pool;
      for (std::size_t i = 0; i < workload.size(); ++i)
        if (live(i) && (config.drq_mode == DrqMode::offline || arrived(i))) pool.push_back(i);
      if (pool.empty()) return std::nullopt;

      if (round > 0 && config.trq_mode == TrqMode::formula)
        for (std::size_t i : plan) trq[i] = trq_update(trq[i], tq, plan.size());
      ++round;

      std::vector<ProcView> views;
      std::vector<Time> rbt;
      for (std::size_t i : pool) {
        const auto& p = workload[i];
        Time estimate = trq[i];
        if (config.trq_mode == TrqMode::measured) {
          estimate = clock - p.arrival - (p.burst - remaining[i]);
          if (estimate < 0) estimate = 0;
        }
        views.push_back({p.id, p.arrival, p.burst, remaining[i], estimate, i});
        rbt.push_back(remaining[i]);
      }
      tq = median_quantum(rbt);
      plan.clear();
      for (const auto& id : round_order(round, views, config.threshold_fraction))
        plan.push_back(*workload.index_of(id));
      cursor = 0;
    }

    std::size_t i = plan[cursor++];
    Time burst = workload[i].burst;
    Time slice = tq;
    if (threshold_qualifies(remaining[i], burst, config.threshold_fraction)) slice = remaining[i];
    Time left = remaining_after_round(remaining[i], tq);
    if (left > 0 && threshold_qualifies(left, burst, config.threshold_fraction)) slice = remaining[i];
    return Choice{i, slice};
  }
};

}  // namespace

Schedule tick_simulate(const Workload& workload, const PolicyConfig& config) {
  config.validate();
  TickState st(workload, config);
  Schedule out;

  std::optional<Choice> pending;
  std::optional<std::size_t> running;
  Time slice_left = 0;
  std::size_t dispatch_serial = 0;
  std::size_t last_tick_serial = 0;
  std::size_t live_count = workload.size();

  // Guard against a stuck loop: the schedule cannot outlast the last
  // arrival plus all of the work.
  Time horizon = workload.total_burst();
  for (const auto& p : workload.processes()) horizon = std::max(horizon, p.arrival + workload.total_burst());

  while (live_count > 0) {
    if (st.clock > horizon) throw std::logic_error("tick oracle exceeded its horizon");
    if (!running && !pending) pending = st.decide();
    if (!running && pending && st.arrived(pending->index)) {
      running = pending->index;
      slice_left = pending->slice;
      pending.reset();
      ++dispatch_serial;
    }

    if (running) {
      const std::size_t i = *running;
      const auto& id = workload[i].id;
      if (last_tick_serial == dispatch_serial && !out.segments.empty())
        out.segments.back().end = st.clock + 1;
      else
        out.segments.push_back({id, st.clock, st.clock + 1});
      last_tick_serial = dispatch_serial;

      --st.remaining[i];
      --slice_left;
      ++st.clock;
      if (st.remaining[i] == 0) {
        out.completion[id] = st.clock;
        --live_count;
        running.reset();
      } else if (slice_left == 0) {
        running.reset();
      }
    } else {
      ++st.clock;
    }
  }
  return out;
}

}  // namespace drqsim
