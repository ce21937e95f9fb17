#include "edgesim/workload.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "edgesim/util.hpp"

namespace edgesim {

void ScenarioSpec::validate() const {
  if (types.empty()) throw std::invalid_argument("scenario: no task types");
  for (std::size_t k = 0; k < types.size(); ++k) {
    if (types[k].id != static_cast<int>(k))
      throw std::invalid_argument("scenario: type ids must be 0..K-1 in order");
    types[k].validate();
  }
  if (derivation == RateDerivation::FromLoadRatio) {
    if (load_ratio.size() != types.size())
      throw std::invalid_argument("scenario: load_ratio length must match types");
    for (double w : load_ratio)
      if (!(w > 0.0)) throw std::invalid_argument("scenario: load_ratio weights must be > 0");
    if (!(load_fraction > 0.0 && load_fraction <= 1.5))
      throw std::invalid_argument("scenario: load_fraction must be in (0, 1.5]");
  }
}

std::vector<DerivedRate> derive_rates(const ScenarioSpec& spec, Rate f_max) {
  if (spec.derivation != RateDerivation::FromLoadRatio)
    throw std::invalid_argument("derive_rates: scenario is not FromLoadRatio");
  spec.validate();

  double ratio_sum = 0.0;
  for (double w : spec.load_ratio) ratio_sum += w;

  std::vector<DerivedRate> out;
  out.reserve(spec.types.size());
  for (std::size_t k = 0; k < spec.types.size(); ++k) {
    const TaskTypeSpec& ts = spec.types[k];
    double target_load = spec.load_fraction * f_max * spec.load_ratio[k] / ratio_sum;
    double lambda = target_load / ts.mean_cycles();
    int md = std::max(1, static_cast<int>(std::llround(lambda / ts.per_md_rate)));
    out.push_back({static_cast<double>(md) * ts.per_md_rate, md});
  }
  return out;
}

ScenarioSpec resolve_scenario(const ScenarioSpec& spec, Rate f_max) {
  ScenarioSpec resolved = spec;
  if (spec.derivation == RateDerivation::FromLoadRatio) {
    auto rates = derive_rates(spec, f_max);
    for (std::size_t k = 0; k < resolved.types.size(); ++k)
      resolved.types[k].md_count = rates[k].md_count;
  }
  resolved.validate();
  return resolved;
}

double realized_load(const ScenarioSpec& resolved, Rate f_max) {
  double load = 0.0;
  for (const TaskTypeSpec& ts : resolved.types) load += ts.rate() * ts.mean_cycles();
  return load / f_max;
}

TypeArrivalGenerator::TypeArrivalGenerator(const TaskTypeSpec& spec, std::uint64_t master_seed)
    : spec_(spec), rng_(substream_seed(master_seed, static_cast<std::uint64_t>(spec.id))) {
  if (spec_.arrival == ArrivalProcess::Deterministic) {
    const Seconds period = 1.0 / spec_.per_md_rate;
    md_next_.resize(static_cast<std::size_t>(spec_.md_count));
    for (auto& t : md_next_) t = rng_.uniform(0.0, period);  // independent phase per MD
  } else {
    poisson_next_ = rng_.exponential(spec_.rate());
  }
}

Task TypeArrivalGenerator::make_task(Seconds time) {
  Task t;
  t.type_id = spec_.id;
  t.required_cycles = sample_required_cycles(spec_.mean_cycles(), spec_.ci_variation, rng_);
  t.deadline = sample_deadline(spec_.deadline_lo, spec_.deadline_hi, rng_);
  t.arrival_time = time;
  return t;
}

void TypeArrivalGenerator::slot_arrivals(std::int64_t slot_index, Seconds slot,
                                         std::vector<ArrivalEvent>& out) {
  const Seconds begin = static_cast<double>(slot_index) * slot;
  const Seconds end = begin + slot;

  if (spec_.arrival == ArrivalProcess::Poisson) {
    while (poisson_next_ < end) {
      out.push_back({poisson_next_, make_task(poisson_next_)});
      poisson_next_ += rng_.exponential(spec_.rate());
    }
    return;
  }

  // Deterministic per-MD streams. Collect emission instants, then sample task
  // attributes in (time, md) order so the draw sequence is well defined even
  // when several MDs fire within one slot.
  const Seconds period = 1.0 / spec_.per_md_rate;
  md_order_.clear();
  std::vector<std::pair<Seconds, std::size_t>> due;
  for (std::size_t m = 0; m < md_next_.size(); ++m) {
    while (md_next_[m] < end) {
      due.emplace_back(md_next_[m], m);
      md_next_[m] += period;
    }
  }
  std::sort(due.begin(), due.end());
  for (const auto& [time, m] : due) out.push_back({time, make_task(time)});
}

void write_arrivals_csv(const std::vector<ArrivalEvent>& events, std::ostream& os) {
  os << "time_s,type_id,required_cycles,deadline_s\n";
  for (const ArrivalEvent& ev : events) {
    os << format_double(ev.time) << ',' << ev.task.type_id << ','
       << format_double(ev.task.required_cycles) << ',' << format_double(ev.task.deadline)
       << '\n';
  }
}

}  // namespace edgesim
