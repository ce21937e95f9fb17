#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "edgesim/core.hpp"
#include "edgesim/rng.hpp"

namespace edgesim {

enum class RateDerivation { Explicit, FromLoadRatio };

/// A full workload description: the task types plus how their rates are
/// fixed. With FromLoadRatio the per-type MD counts are derived from the
/// target load fraction and the load ratio before a run starts.
struct ScenarioSpec {
  std::string name;
  std::vector<TaskTypeSpec> types;
  double load_fraction = 0.9;       // rho
  std::vector<double> load_ratio;   // relative cycle-load weights
  RateDerivation derivation = RateDerivation::Explicit;

  void validate() const;
};

struct ArrivalEvent {
  Seconds time = 0.0;
  Task task;
};

struct DerivedRate {
  double lambda = 0.0;  // realized tasks/s (md_count * per_md_rate)
  int md_count = 0;
};

/// Splits rho*f_max of cycle load across types proportionally to the load
/// ratio, quantized to whole devices (at least one per type). The returned
/// lambda is the realized rate after quantization.
std::vector<DerivedRate> derive_rates(const ScenarioSpec& spec, Rate f_max);

/// Copy of `spec` with md_count per type replaced by the derived values.
/// No-op for Explicit derivation.
ScenarioSpec resolve_scenario(const ScenarioSpec& spec, Rate f_max);

/// Realized cycle load divided by f_max.
double realized_load(const ScenarioSpec& resolved, Rate f_max);

inline Cycles sample_required_cycles(Cycles mean_cycles, double v, Rng& rng) {
  if (v == 0.0) return mean_cycles;
  return rng.uniform((1.0 - v) * mean_cycles, (1.0 + v) * mean_cycles);
}

inline Seconds sample_deadline(Seconds lo, Seconds hi, Rng& rng) {
  if (lo == hi) return lo;
  return rng.uniform(lo, hi);
}

/// Arrival stream for one task type. Consumes a dedicated RNG substream of
/// the master seed, so the stream is identical across runs and policies and
/// unaffected by other types. Slots must be queried in order from 0.
class TypeArrivalGenerator {
 public:
  TypeArrivalGenerator(const TaskTypeSpec& spec, std::uint64_t master_seed);

  /// Appends this type's arrivals with time in [slot_index*slot, +slot) to
  /// `out`, sorted by time. Tasks carry sampled cycles and deadlines; seq is
  /// left unassigned.
  void slot_arrivals(std::int64_t slot_index, Seconds slot, std::vector<ArrivalEvent>& out);

  const TaskTypeSpec& spec() const { return spec_; }

 private:
  Task make_task(Seconds time);

  TaskTypeSpec spec_;
  Rng rng_;
  std::vector<Seconds> md_next_;          // deterministic mode: next arrival per MD
  std::vector<std::size_t> md_order_;     // scratch for merging per-MD emissions
  Seconds poisson_next_ = 0.0;
};

/// One record per arrival: time_s, type_id, required_cycles, deadline_s.
void write_arrivals_csv(const std::vector<ArrivalEvent>& events, std::ostream& os);

}  // namespace edgesim
