#ifndef MONSCHED_GREEDY_HPP
#define MONSCHED_GREEDY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "monsched/exec.hpp"
#include "monsched/schedule.hpp"

namespace monsched {

struct GreedyOptions {
  // Unset: ties go to the lowest (x, label). Set: uniform among ties.
  std::optional<std::uint64_t> tie_break_seed;
  Exec exec = Exec::parallel;
};

struct GreedyPick {
  int iteration = 0;      // 1-based
  int x = 0;
  int label = 0;          // 1-based slot
  std::int64_t gain = 0;
  std::int64_t objective = 0;  // sum_y |F(y)| after the pick
};

struct GreedyResult {
  Labeling labeling;
  std::vector<GreedyPick> trace;
};

// Marginal-gain greedy over (device, label) pairs. Picks continue until every
// device holds exactly sigma labels, zero-gain picks included.
GreedyResult greedy_schedule(const ProblemInstance& inst, const GreedyOptions& options = {});

}  // namespace monsched

#endif  // MONSCHED_GREEDY_HPP
