#include "monsched/schedule.hpp"

#include <stdexcept>

#include "monsched/errors.hpp"

namespace monsched {

ProblemInstance::ProblemInstance(CoverageGraph cov, int k_slots, int battery)
    : coverage(std::move(cov)), k(k_slots), sigma(battery) {
  if (k < 1) throw InputError("lifetime k must be at least 1");
  if (k > kMaxSlots) throw InputError("lifetime k above " + std::to_string(kMaxSlots));
  if (sigma < 1 || sigma > k) throw InputError("battery sigma must satisfy 1 <= sigma <= k");
  if (coverage.y_count() == 0) throw InputError("instance has no targets");
}

Labeling::Labeling(int x_count, int k) : k_(k), masks_(static_cast<std::size_t>(x_count), 0) {
  if (k < 0 || k > kMaxSlots) throw InputError("label range k out of bounds");
}

void Labeling::set_mask(int x, LabelMask m) {
  if ((m & ~full_mask(k_)) != 0) throw InputError("label outside 1..k");
  masks_.at(x) = m;
}

void Labeling::add_label(int x, int slot) {
  if (slot < 1 || slot > k_) throw InputError("label " + std::to_string(slot) + " outside 1..k");
  masks_.at(x) |= LabelMask{1} << (slot - 1);
}

bool Labeling::has_label(int x, int slot) const {
  return slot >= 1 && slot <= k_ && ((masks_.at(x) >> (slot - 1)) & 1U) != 0;
}

std::vector<int> Labeling::labels(int x) const {
  std::vector<int> out;
  for (LabelMask m = masks_.at(x); m != 0; m &= m - 1) out.push_back(__builtin_ctzll(m) + 1);
  return out;
}

Schedule labeling_to_schedule(const Labeling& labeling) {
  Schedule s;
  s.slots.assign(static_cast<std::size_t>(labeling.k()), {});
  for (int x = 0; x < labeling.size(); ++x) {
    for (LabelMask m = labeling.mask(x); m != 0; m &= m - 1) {
      s.slots[__builtin_ctzll(m)].push_back(x);
    }
  }
  return s;
}

Labeling schedule_to_labeling(const Schedule& schedule, int x_count) {
  Labeling l(x_count, static_cast<int>(schedule.slots.size()));
  for (std::size_t j = 0; j < schedule.slots.size(); ++j) {
    for (int x : schedule.slots[j]) l.add_label(x, static_cast<int>(j) + 1);
  }
  return l;
}

LabelMask f_union(const Labeling& labeling, const CoverageGraph& coverage, int y) {
  LabelMask m = 0;
  for (int x : coverage.y_neighbors(y)) m |= labeling.mask(x);
  return m;
}

std::int64_t labeling_potential(const CoverageGraph& coverage, const Labeling& labeling) {
  std::int64_t total = 0;
  for (int y = 0; y < coverage.y_count(); ++y) total += label_count(f_union(labeling, coverage, y));
  return total;
}

std::vector<std::int64_t> slot_coverage(const CoverageGraph& coverage, const Schedule& schedule) {
  std::vector<std::int64_t> out;
  std::vector<char> hit(static_cast<std::size_t>(coverage.y_count()));
  for (const auto& slot : schedule.slots) {
    std::fill(hit.begin(), hit.end(), 0);
    std::int64_t covered = 0;
    for (int x : slot) {
      for (int y : coverage.x_neighbors(x)) {
        if (!hit[y]) {
          hit[y] = 1;
          ++covered;
        }
      }
    }
    out.push_back(covered);
  }
  return out;
}

void validate_labeling(const ProblemInstance& inst, const Labeling& labeling) {
  if (labeling.size() != inst.coverage.x_count()) {
    throw ValidationError("labeling has " + std::to_string(labeling.size()) +
                          " devices, instance has " + std::to_string(inst.coverage.x_count()));
  }
  if (labeling.k() != inst.k) {
    throw ValidationError("labeling uses k=" + std::to_string(labeling.k()) +
                          ", instance has k=" + std::to_string(inst.k));
  }
  std::string offenders;
  for (int x = 0; x < labeling.size(); ++x) {
    if (label_count(labeling.mask(x)) > inst.sigma) {
      if (!offenders.empty()) offenders += ", ";
      offenders += inst.coverage.x_name(x);
    }
  }
  if (!offenders.empty()) {
    throw ValidationError("battery constraint violated (more than sigma=" +
                          std::to_string(inst.sigma) + " labels) at: " + offenders);
  }
}

ScheduleReport score(const ProblemInstance& inst, const Labeling& labeling) {
  validate_labeling(inst, labeling);
  ScheduleReport r;
  r.schedule = labeling_to_schedule(labeling);
  r.per_slot_covered = slot_coverage(inst.coverage, r.schedule);
  r.potential = labeling_potential(inst.coverage, labeling);
  std::int64_t by_slot = 0;
  for (auto c : r.per_slot_covered) by_slot += c;
  if (by_slot != r.potential) {
    throw std::logic_error("label-union and slot forms of the score disagree");
  }
  r.score = Fraction(static_cast<std::uint64_t>(r.potential), inst.score_denominator());
  return r;
}

Fraction expected_detection_q(const ProblemInstance& inst, const Labeling& labeling) {
  if (inst.objective() != Objective::detection) {
    throw InputError("expected detection is defined for the detection objective only");
  }
  validate_labeling(inst, labeling);
  const auto m = static_cast<std::uint64_t>(inst.coverage.y_count());
  Fraction sum;
  for (int y = 0; y < inst.coverage.y_count(); ++y) {
    const Fraction q_tau(static_cast<std::uint64_t>(label_count(f_union(labeling, inst.coverage, y))),
                         static_cast<std::uint64_t>(inst.k));
    sum = sum + q_tau;
  }
  return sum * Fraction(1, m);
}

}  // namespace monsched
