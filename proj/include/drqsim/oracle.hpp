#pragma once

#include "drqsim/engine.hpp"
#include "drqsim/policies.hpp"
#include "drqsim/workload.hpp"

namespace drqsim {

// Reference simulator that advances the clock one unit per step and
// re-derives every policy decision at dispatch boundaries with its own
// bookkeeping. It shares only the pure policy math with the engine and is
// O(makespan). Must produce exactly the engine's Schedule.
Schedule tick_simulate(const Workload& workload, const PolicyConfig& config);

}  // namespace drqsim
