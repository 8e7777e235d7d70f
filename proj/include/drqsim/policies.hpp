#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drqsim/common.hpp"

namespace drqsim {

enum class PolicyKind { fcfs, srr, drq };

// offline: every unfinished process is known from time 0 and belongs to the
// round being planned; the CPU idles until a planned process arrives.
// online: a round covers only processes that had arrived when it started.
enum class DrqMode { offline, online };

// formula: waiting time estimated as the sum of TQ_i * (k_i - 1) over the
// rounds a process took part in. measured: clock - arrival - cpu consumed.
enum class TrqMode { formula, measured };

struct PolicyConfig {
  PolicyKind kind = PolicyKind::drq;
  Time fixed_quantum = 0;                       // srr only
  Rational threshold_fraction = Rational(4, 100);  // drq only
  DrqMode drq_mode = DrqMode::offline;
  TrqMode trq_mode = TrqMode::formula;

  static PolicyConfig fcfs();
  static PolicyConfig srr(Time quantum);
  static PolicyConfig drq(DrqMode mode = DrqMode::offline, TrqMode trq = TrqMode::formula,
                          Rational threshold = Rational(4, 100));

  // Throws std::invalid_argument if an invariant does not hold.
  void validate() const;

  // Short name, e.g. "fcfs", "srr:3", "drq", "drq:online".
  std::string label() const;
};

// Parses "fcfs", "srr:Q", "drq", "drq:offline", "drq:online".
PolicyConfig parse_policy(std::string_view text);

std::string_view to_string(PolicyKind kind);
std::string_view to_string(DrqMode mode);
std::string_view to_string(TrqMode mode);

// A live process as seen by a policy. position is the process's index in the
// workload and orders ties between equal arrivals for fcfs and srr.
struct ProcView {
  std::string id;
  Time arrival = 0;
  Time original_burst = 1;
  Time remaining = 1;
  Time trq = 0;
  std::size_t position = 0;
};

struct RoundPlan {
  std::size_t round_index = 1;
  Time quantum = 1;
  std::vector<std::string> order;
};

// Upper median: element at index floor(n/2) of the ascending sort.
// Throws std::invalid_argument on empty input.
Time median_quantum(std::span<const Time> remaining_bursts);

Time remaining_after_round(Time remaining, Time quantum);

Time trq_update(Time trq_prev, Time quantum, std::size_t k);

// remaining <= fraction * original_burst, compared exactly.
bool threshold_qualifies(Time remaining, Time original_burst, Rational fraction);

// Qualifying processes first (by arrival, then id). The rest: by arrival in
// round 1, by (trq - arrival) afterwards, ties by arrival then id.
std::vector<std::string> round_order(std::size_t round_index, std::span<const ProcView> procs,
                                     Rational threshold_fraction);

struct Dispatch {
  std::string id;
  Time max_run = 1;
  std::size_t round_index = 1;
  std::optional<Time> quantum;  // nullopt for fcfs
};

// Dispatch state for one simulation. Not thread-safe; one instance per run.
class Policy {
 public:
  virtual ~Policy() = default;

  // ready: every unfinished process the policy may see at clock, in workload
  // order. Returns nullopt when nothing is dispatchable. drq keeps its own
  // trq bookkeeping and ignores ProcView::trq on input.
  virtual std::optional<Dispatch> next_dispatch(Time clock, std::span<const ProcView> ready) = 0;

  // True if the policy plans over processes that have not yet arrived.
  virtual bool sees_future_arrivals() const { return false; }
};

std::unique_ptr<Policy> make_policy(const PolicyConfig& config);

}  // namespace drqsim
