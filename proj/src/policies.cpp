#include "drqsim/policies.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace drqsim {

PolicyConfig PolicyConfig::fcfs() {
  PolicyConfig c;
  c.kind = PolicyKind::fcfs;
  return c;
}

PolicyConfig PolicyConfig::srr(Time quantum) {
  PolicyConfig c;
  c.kind = PolicyKind::srr;
  c.fixed_quantum = quantum;
  return c;
}

PolicyConfig PolicyConfig::drq(DrqMode mode, TrqMode trq, Rational threshold) {
  PolicyConfig c;
  c.kind = PolicyKind::drq;
  c.drq_mode = mode;
  c.trq_mode = trq;
  c.threshold_fraction = threshold;
  return c;
}

void PolicyConfig::validate() const {
  if (kind == PolicyKind::srr && fixed_quantum < 1)
    throw std::invalid_argument("srr requires a quantum >= 1");
  if (threshold_fraction.numerator() < 0 || threshold_fraction >= Rational(1))
    throw std::invalid_argument("threshold fraction must be in [0, 1)");
}

std::string PolicyConfig::label() const {
  switch (kind) {
    case PolicyKind::fcfs:
      return "fcfs";
    case PolicyKind::srr:
      return "srr:" + std::to_string(fixed_quantum);
    case PolicyKind::drq:
      return drq_mode == DrqMode::offline ? "drq" : "drq:online";
  }
  return {};
}

std::string_view to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::fcfs: return "fcfs";
    case PolicyKind::srr: return "srr";
    case PolicyKind::drq: return "drq";
  }
  return {};
}

std::string_view to_string(DrqMode mode) { return mode == DrqMode::offline ? "offline" : "online"; }

std::string_view to_string(TrqMode mode) { return mode == TrqMode::formula ? "formula" : "measured"; }

PolicyConfig parse_policy(std::string_view text) {
  std::string_view name = text.substr(0, text.find(':'));
  std::string_view arg = name.size() < text.size() ? text.substr(name.size() + 1) : std::string_view{};
  bool has_arg = name.size() < text.size();

  if (name == "fcfs" && !has_arg) return PolicyConfig::fcfs();
  if (name == "srr") {
    if (!has_arg) return PolicyConfig::srr(0);  // quantum supplied separately
    Time q = 0;
    for (char c : arg) {
      if (c < '0' || c > '9' || q > 1'000'000'000) throw std::invalid_argument("bad srr quantum in '" + std::string(text) + "'");
      q = q * 10 + (c - '0');
    }
    if (arg.empty() || q < 1) throw std::invalid_argument("bad srr quantum in '" + std::string(text) + "'");
    return PolicyConfig::srr(q);
  }
  if (name == "drq") {
    if (!has_arg || arg == "offline") return PolicyConfig::drq(DrqMode::offline);
    if (arg == "online") return PolicyConfig::drq(DrqMode::online);
  }
  throw std::invalid_argument("unknown policy '" + std::string(text) + "'");
}

Time median_quantum(std::span<const Time> remaining_bursts) {
  if (remaining_bursts.empty()) throw std::invalid_argument("median of an empty set");
  std::vector<Time> v(remaining_bursts.begin(), remaining_bursts.end());
  auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

Time remaining_after_round(Time remaining, Time quantum) { return std::max<Time>(remaining - quantum, 0); }

Time trq_update(Time trq_prev, Time quantum, std::size_t k) {
  return trq_prev + quantum * static_cast<Time>(k - 1);
}

bool threshold_qualifies(Time remaining, Time original_burst, Rational fraction) {
  return Rational(remaining) <= fraction * original_burst;
}

std::vector<std::string> round_order(std::size_t round_index, std::span<const ProcView> procs,
                                     Rational threshold_fraction) {
  std::vector<const ProcView*> head;
  std::vector<const ProcView*> rest;
  for (const auto& p : procs)
    (threshold_qualifies(p.remaining, p.original_burst, threshold_fraction) ? head : rest).push_back(&p);

  auto by_arrival = [](const ProcView* a, const ProcView* b) {
    return std::tie(a->arrival, a->id) < std::tie(b->arrival, b->id);
  };
  std::sort(head.begin(), head.end(), by_arrival);
  if (round_index <= 1) {
    std::sort(rest.begin(), rest.end(), by_arrival);
  } else {
    std::sort(rest.begin(), rest.end(), [](const ProcView* a, const ProcView* b) {
      Time ka = a->trq - a->arrival;
      Time kb = b->trq - b->arrival;
      return std::tie(ka, a->arrival, a->id) < std::tie(kb, b->arrival, b->id);
    });
  }

  std::vector<std::string> order;
  order.reserve(procs.size());
  for (const auto* p : head) order.push_back(p->id);
  for (const auto* p : rest) order.push_back(p->id);
  return order;
}

namespace {

const ProcView* earliest(std::span<const ProcView> ready, const std::set<std::string>* exclude = nullptr) {
  const ProcView* best = nullptr;
  for (const auto& p : ready) {
    if (exclude && exclude->count(p.id)) continue;
    if (!best || std::tie(p.arrival, p.position) < std::tie(best->arrival, best->position)) best = &p;
  }
  return best;
}

class FcfsPolicy final : public Policy {
 public:
  std::optional<Dispatch> next_dispatch(Time, std::span<const ProcView> ready) override {
    const ProcView* p = earliest(ready);
    if (!p) return std::nullopt;
    return Dispatch{p->id, p->remaining, 1, std::nullopt};
  }
};

// Round-based rotation: each arrived process is served once per round, in
// arrival order; a round ends once nothing arrived is left unserved.
class SrrPolicy final : public Policy {
 public:
  explicit SrrPolicy(Time quantum) : quantum_(quantum) {}

  std::optional<Dispatch> next_dispatch(Time, std::span<const ProcView> ready) override {
    if (ready.empty()) return std::nullopt;
    const ProcView* p = round_ == 0 ? nullptr : earliest(ready, &served_);
    if (!p) {
      ++round_;
      served_.clear();
      p = earliest(ready);
    }
    served_.insert(p->id);
    return Dispatch{p->id, quantum_, round_, quantum_};
  }

 private:
  Time quantum_;
  std::size_t round_ = 0;
  std::set<std::string> served_;
};

class DrqPolicy final : public Policy {
 public:
  explicit DrqPolicy(const PolicyConfig& config) : config_(config) {}

  bool sees_future_arrivals() const override { return config_.drq_mode == DrqMode::offline; }

  std::optional<Dispatch> next_dispatch(Time clock, std::span<const ProcView> ready) override {
    auto find = [&](const std::string& id) -> const ProcView* {
      for (const auto& p : ready)
        if (p.id == id) return &p;
      return nullptr;
    };
    while (!plan_.empty() && !find(plan_.front())) plan_.pop_front();
    if (plan_.empty()) {
      if (ready.empty()) return std::nullopt;
      start_round(clock, ready);
    }

    const ProcView* p = find(plan_.front());
    plan_.pop_front();
    Time run = quantum_;
    const Rational f = config_.threshold_fraction;
    if (threshold_qualifies(p->remaining, p->original_burst, f) ||
        (p->remaining > quantum_ && threshold_qualifies(p->remaining - quantum_, p->original_burst, f)))
      run = p->remaining;
    return Dispatch{p->id, run, round_, quantum_};
  }

 private:
  void start_round(Time clock, std::span<const ProcView> ready) {
    if (round_ > 0 && config_.trq_mode == TrqMode::formula)
      for (const auto& id : members_) trq_[id] = trq_update(trq_[id], quantum_, members_.size());
    ++round_;

    std::vector<ProcView> views(ready.begin(), ready.end());
    std::vector<Time> remaining;
    remaining.reserve(views.size());
    for (auto& v : views) {
      if (config_.trq_mode == TrqMode::formula) {
        auto it = trq_.find(v.id);
        v.trq = it == trq_.end() ? 0 : it->second;
      } else {
        v.trq = std::max<Time>(0, clock - v.arrival - (v.original_burst - v.remaining));
      }
      remaining.push_back(v.remaining);
    }
    quantum_ = median_quantum(remaining);
    members_ = round_order(round_, views, config_.threshold_fraction);
    plan_.assign(members_.begin(), members_.end());
  }

  PolicyConfig config_;
  std::size_t round_ = 0;
  Time quantum_ = 0;
  std::vector<std::string> members_;
  std::deque<std::string> plan_;
  std::map<std::string, Time> trq_;
};

}  // namespace

std::unique_ptr<Policy> make_policy(const PolicyConfig& config) {
  config.validate();
  switch (config.kind) {
    case PolicyKind::fcfs: return std::make_unique<FcfsPolicy>();
    case PolicyKind::srr: return std::make_unique<SrrPolicy>(config.fixed_quantum);
    case PolicyKind::drq: return std::make_unique<DrqPolicy>(config);
  }
  throw std::invalid_argument("unknown policy kind");
}

}  // namespace drqsim
