#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

namespace edgesim {

// All cycle/time quantities are tracked as continuous doubles; the server
// model is a fluid rate model, not an integer cycle counter.
using Cycles = double;
using Seconds = double;
using Rate = double;  // cycles per second

enum class ArrivalProcess { Deterministic, Poisson };
enum class Causality { Causal, NonCausal };

/// Static description of one service class.
struct TaskTypeSpec {
  int id = 0;
  double data_size_bits = 0.0;
  double mean_ci = 0.0;        // cycles per bit
  double ci_variation = 0.0;   // v in [0, 1)
  Seconds deadline_lo = 0.0;   // compute-deadline bounds, seconds
  Seconds deadline_hi = 0.0;
  ArrivalProcess arrival = ArrivalProcess::Deterministic;
  int md_count = 1;            // |M_k|
  double per_md_rate = 0.0;    // tasks/s emitted by each device

  Cycles mean_cycles() const { return data_size_bits * mean_ci; }
  double rate() const { return static_cast<double>(md_count) * per_md_rate; }
  Seconds deadline_mean() const { return 0.5 * (deadline_lo + deadline_hi); }

  // Throws std::invalid_argument on a violated invariant.
  void validate() const;
};

enum class TaskOutcome : std::uint8_t { Pending, Completed, Dropped };

/// One offloaded job instance.
struct Task {
  int type_id = 0;
  std::int64_t seq = -1;       // global arrival order, assigned by the engine
  Cycles required_cycles = 0.0;
  Seconds deadline = 0.0;      // relative to arrival
  Seconds arrival_time = 0.0;
  Cycles executed_cycles = 0.0;
  TaskOutcome outcome = TaskOutcome::Pending;
  Seconds finish_time = 0.0;   // completion or drop instant

  Seconds absolute_deadline() const { return arrival_time + deadline; }
  Cycles remaining_cycles() const { return required_cycles - executed_cycles; }
};

/// Per-type FIFO backlog. The head of `fifo` is the task in service.
struct QueueState {
  int type_id = 0;
  std::deque<Task> fifo;
  Cycles exact_backlog = 0.0;            // sum of remaining cycles over fifo
  Cycles cumulative_arrived_cycles = 0.0;
  std::int64_t slots_elapsed = 0;

  std::size_t task_count() const { return fifo.size(); }
  Cycles head_executed() const { return fifo.empty() ? 0.0 : fifo.front().executed_cycles; }

  // Recomputes the backlog by walking the fifo; used by audits.
  Cycles audit_backlog() const;
};

struct EngineConfig {
  Rate f_max = 0.0;
  Seconds slot = 0.0;
  std::int64_t horizon_tasks = 0;
  std::uint64_t seed = 0;
  Causality causality = Causality::Causal;

  void validate() const;
};

/// Per-slot map queue -> allocated compute rate. rates[k] is the rate for
/// type k; sum over k never exceeds the f_max the plan was built against.
struct AllocationPlan {
  std::vector<Rate> rates;

  Rate total() const;
  // Throws if a rate is negative or the sum exceeds f_max.
  void validate(Rate f_max) const;
};

// ---------------------------------------------------------------------------
// Queue mechanics. These are the elementary formulas shared by the policies,
// the engine and the diagnostics; all are pure.

/// One-slot backlog recursion: max(q + arrivals - service, 0).
inline Cycles update_backlog(Cycles q, Cycles arrivals, Cycles service) {
  if (q < 0.0 || arrivals < 0.0 || service < 0.0)
    throw std::invalid_argument("update_backlog: negative input");
  return std::max(q + arrivals - service, 0.0);
}

/// Expected cycle inflow per slot for a type: lambda * c_mean * slot.
inline Cycles estimate_arrival_load(double lambda, Cycles mean_cycles, Seconds slot) {
  return lambda * mean_cycles * slot;
}

/// Little's-law sojourn estimate for the next slot's backlog. A zero average
/// rate means no traffic has ever arrived, so the estimate is 0 by convention.
inline Seconds estimate_sojourn(Cycles next_backlog, Rate avg_rate) {
  if (avg_rate <= 0.0) return 0.0;
  return next_backlog / avg_rate;
}

/// Cycle-count estimate of a queue from observable quantities: n waiting
/// tasks behind the head plus the in-service task, (n+1)*c_mean - executed.
/// n = 0 denotes an empty queue and yields 0.
inline Cycles estimate_backlog(std::int64_t n, Cycles mean_cycles, Cycles head_executed) {
  if (n <= 0) return 0.0;
  return std::max(static_cast<double>(n + 1) * mean_cycles - head_executed, 0.0);
}

/// Backlog estimate for an observed queue of `task_count` tasks whose head
/// has `head_executed` cycles done. Empty queue estimates to 0; otherwise the
/// in-service task counts once, so the estimate is task_count*c_mean - done.
/// Exact when ci_variation = 0.
inline Cycles estimate_queue_backlog(std::size_t task_count, Cycles mean_cycles,
                                     Cycles head_executed) {
  if (task_count == 0) return 0.0;
  return std::max(static_cast<double>(task_count) * mean_cycles - head_executed, 0.0);
}

/// Running average cycle-arrival rate over the elapsed slots; 0 before the
/// first slot completes.
inline Rate running_avg_rate(Cycles cumulative_cycles, std::int64_t elapsed_slots, Seconds slot) {
  if (elapsed_slots <= 0) return 0.0;
  return cumulative_cycles / (static_cast<double>(elapsed_slots) * slot);
}

}  // namespace edgesim
