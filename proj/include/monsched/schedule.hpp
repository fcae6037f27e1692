#ifndef MONSCHED_SCHEDULE_HPP
#define MONSCHED_SCHEDULE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monsched/coverage.hpp"
#include "monsched/fraction.hpp"

namespace monsched {

// Bit j set <=> slot j+1 is in the set. Slots are 1-based in every external
// format and 0-based here.
using LabelMask = std::uint64_t;
inline constexpr int kMaxSlots = 64;

inline LabelMask full_mask(int k) { return k >= 64 ? ~LabelMask{0} : ((LabelMask{1} << k) - 1); }
inline int label_count(LabelMask m) { return __builtin_popcountll(m); }

struct ProblemInstance {
  CoverageGraph coverage;
  int k = 1;      // lifetime in slots
  int sigma = 1;  // battery in slots

  ProblemInstance() = default;
  // Throws InputError unless 1 <= sigma <= k <= kMaxSlots.
  ProblemInstance(CoverageGraph coverage, int k, int sigma);

  Objective objective() const { return coverage.objective(); }
  std::uint64_t score_denominator() const {
    return static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(coverage.y_count());
  }
};

// f: X -> subsets of {1..k}. Partial labelings (|f(x)| < sigma) are valid
// values; the battery bound is checked when scoring.
class Labeling {
 public:
  Labeling() = default;
  Labeling(int x_count, int k);

  int size() const { return static_cast<int>(masks_.size()); }
  int k() const { return k_; }

  LabelMask mask(int x) const { return masks_.at(x); }
  void set_mask(int x, LabelMask m);
  // slot is 1-based.
  void add_label(int x, int slot);
  bool has_label(int x, int slot) const;
  // 1-based, ascending.
  std::vector<int> labels(int x) const;

  std::span<const LabelMask> masks() const { return masks_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  int k_ = 0;
  std::vector<LabelMask> masks_;
};

// slots[j] lists the x indices active in slot j+1, ascending.
struct Schedule {
  std::vector<std::vector<int>> slots;
  friend bool operator==(const Schedule&, const Schedule&) = default;
};

Schedule labeling_to_schedule(const Labeling& labeling);
Labeling schedule_to_labeling(const Schedule& schedule, int x_count);

// F(y): labels available to y from its X-neighbours.
LabelMask f_union(const Labeling& labeling, const CoverageGraph& coverage, int y);

// Sum over y of |F(y)|.
std::int64_t labeling_potential(const CoverageGraph& coverage, const Labeling& labeling);
// Per-slot |N(S_j)|, computed from the slot sets.
std::vector<std::int64_t> slot_coverage(const CoverageGraph& coverage, const Schedule& schedule);

struct ScheduleReport {
  std::vector<std::int64_t> per_slot_covered;
  Fraction score;
  std::int64_t potential = 0;
  Schedule schedule;
};

// Throws ValidationError naming every x with more than sigma labels, a label
// outside 1..k or a size mismatch.
void validate_labeling(const ProblemInstance& inst, const Labeling& labeling);

// D (or I) of a labeling. Evaluates both the label-union form and the
// slot-neighbourhood form and throws std::logic_error if they disagree.
ScheduleReport score(const ProblemInstance& inst, const Labeling& labeling);

// Q = mean over targets of (slots covering the target) / k, accumulated as an
// exact sum of per-target fractions. Detection only.
Fraction expected_detection_q(const ProblemInstance& inst, const Labeling& labeling);

}  // namespace monsched

#endif  // MONSCHED_SCHEDULE_HPP
