#include "edgesim/core.hpp"

#include <cmath>
#include <string>

namespace edgesim {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void TaskTypeSpec::validate() const {
  require(std::isfinite(data_size_bits) && data_size_bits > 0.0,
          "task type " + std::to_string(id) + ": data_size_bits must be > 0");
  require(std::isfinite(mean_ci) && mean_ci > 0.0,
          "task type " + std::to_string(id) + ": mean_ci must be > 0");
  require(ci_variation >= 0.0 && ci_variation < 1.0,
          "task type " + std::to_string(id) + ": ci_variation must be in [0, 1)");
  require(deadline_lo > 0.0 && deadline_lo <= deadline_hi,
          "task type " + std::to_string(id) + ": deadline range must satisfy 0 < lo <= hi");
  require(md_count >= 1, "task type " + std::to_string(id) + ": md_count must be >= 1");
  require(std::isfinite(per_md_rate) && per_md_rate > 0.0,
          "task type " + std::to_string(id) + ": per_md_rate must be > 0");
}

void EngineConfig::validate() const {
  require(std::isfinite(f_max) && f_max > 0.0, "engine: f_max must be > 0");
  require(std::isfinite(slot) && slot > 0.0, "engine: slot must be > 0");
  require(horizon_tasks > 0, "engine: horizon_tasks must be > 0");
}

Cycles QueueState::audit_backlog() const {
  Cycles sum = 0.0;
  for (const Task& t : fifo) sum += t.remaining_cycles();
  return sum;
}

Rate AllocationPlan::total() const {
  Rate sum = 0.0;
  for (Rate r : rates) sum += r;
  return sum;
}

void AllocationPlan::validate(Rate f_max) const {
  for (Rate r : rates)
    require(r >= 0.0, "allocation plan: negative rate");
  require(total() <= f_max, "allocation plan: total exceeds f_max");
}

}  // namespace edgesim
