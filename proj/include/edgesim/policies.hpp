#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgesim/core.hpp"
#include "edgesim/workload.hpp"

namespace edgesim {

enum class PolicyKind {
  Dynamic,
  DynamicNoDrop,
  DynamicNonCausal,
  Sequential,
  Parallel,
  Sharing,
};

std::optional<PolicyKind> parse_policy(std::string_view name);
std::string_view policy_name(PolicyKind kind);
const std::vector<std::string>& policy_names();

inline bool is_dynamic(PolicyKind k) {
  return k == PolicyKind::Dynamic || k == PolicyKind::DynamicNoDrop ||
         k == PolicyKind::DynamicNonCausal;
}
inline bool drops_enabled(PolicyKind k) {
  return k == PolicyKind::Dynamic || k == PolicyKind::DynamicNonCausal;
}
inline Causality policy_causality(PolicyKind k) {
  return k == PolicyKind::DynamicNonCausal ? Causality::NonCausal : Causality::Causal;
}

/// What a policy sees of one queue at a slot boundary. In Causal mode the
/// backlog is the cycle-count estimate; in NonCausal mode it is exact.
struct QueueObservation {
  int type_id = 0;
  bool nonempty = false;
  Cycles backlog = 0.0;
  Cycles arrival_estimate = 0.0;          // expected cycle inflow this slot
  Seconds min_remaining_deadline = 0.0;   // smallest deadline-minus-now in queue
  Rate avg_rate = 0.0;                    // running average arrival rate
  Seconds head_arrival_time = 0.0;        // valid when nonempty
  std::int64_t head_seq = -1;             // valid when nonempty
};

struct DynamicPolicyState {
  double V = 2.0;
  std::vector<Cycles> q_ref;         // reference queue lengths
  std::vector<Cycles> a_max;         // per-slot arrival caps
  std::vector<double> weights_last;  // diagnostic: last computed weights
};

struct DynamicPolicyOptions {
  double V = 2.0;
  std::vector<Cycles> a_max_override;  // empty = use the default cap
  // NonCausal study switch: when true the arrival estimate is replaced by the
  // realized per-slot arrivals. Off by default so that the causal and
  // non-causal variants see identical inputs when estimates are exact.
  bool exact_arrivals = false;
};

/// Reference level q = max(delta_max * f_max - a_max, 0); the backlog the
/// dynamic policy steers each queue toward.
inline Cycles compute_reference_level(Seconds delta_max, Rate f_max, Cycles a_max) {
  return std::max(delta_max * f_max - a_max, 0.0);
}

/// Queue priority weight; smaller is served first.
inline double compute_weight(Cycles q_ref, Cycles backlog, double V, Cycles arrival_estimate) {
  return (q_ref - backlog) + V * (backlog + arrival_estimate);
}

/// Default per-slot arrival cap: at least one maximal task per slot.
Cycles default_arrival_cap(double lambda, Seconds slot, Cycles mean_cycles, double ci_variation);

/// Builds the dynamic policy state for a resolved scenario.
DynamicPolicyState init_dynamic_state(const ScenarioSpec& resolved, const EngineConfig& cfg,
                                      const DynamicPolicyOptions& opts);

/// Greedy weighted allocation: non-empty queues in ascending weight order each
/// claim min(backlog / min_deadline, remaining); a queue whose earliest
/// deadline already passed claims everything left.
AllocationPlan allocate_dynamic(const std::vector<QueueObservation>& obs,
                                DynamicPolicyState& state, Rate f_max);

/// True when the head task cannot finish by its deadline even at full rate.
inline bool should_drop(Cycles head_remaining, Seconds time_to_deadline, Rate f_max) {
  if (head_remaining < 0.0) throw std::invalid_argument("should_drop: negative remaining");
  return head_remaining / f_max > std::max(time_to_deadline, 0.0);
}

/// Whole capacity to the queue holding the globally oldest pending task.
AllocationPlan allocate_sequential(const std::vector<QueueObservation>& obs, Rate f_max);

/// Static split proportional to the mean traffic load of each type.
std::vector<double> parallel_shares(const ScenarioSpec& resolved);
AllocationPlan allocate_parallel(const std::vector<double>& shares, Rate f_max);

/// Equal split across the currently non-empty queues.
AllocationPlan allocate_sharing(const std::vector<QueueObservation>& obs, Rate f_max);

}  // namespace edgesim
