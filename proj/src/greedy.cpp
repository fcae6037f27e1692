#include "monsched/greedy.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

#include "monsched/rng.hpp"

namespace monsched {

GreedyResult greedy_schedule(const ProblemInstance& inst, const GreedyOptions& options) {
  const CoverageGraph& cov = inst.coverage;
  const int nx = cov.x_count();
  const int k = inst.k;
  GreedyResult result{Labeling(nx, k), {}};
  Labeling& f = result.labeling;

  // counts[y * k + j]: devices covering y that hold label j.
  std::vector<std::int32_t> counts(static_cast<std::size_t>(cov.y_count()) * k, 0);
  std::vector<std::int64_t> gains(static_cast<std::size_t>(nx) * k, -1);
  std::vector<int> open;  // devices with fewer than sigma labels
  for (int x = 0; x < nx; ++x) open.push_back(x);

  Rng rng(derive_seed(options.tie_break_seed.value_or(0), "greedy"));
  std::int64_t objective = 0;
  int iteration = 0;

  while (!open.empty()) {
    const int n_open = static_cast<int>(open.size());
#pragma omp parallel for schedule(dynamic, 4) if (options.exec == Exec::parallel)
    for (int i = 0; i < n_open; ++i) {
      const int x = open[i];
      const LabelMask held = f.mask(x);
      for (int l = 0; l < k; ++l) {
        std::int64_t g = -1;
        if (((held >> l) & 1U) == 0) {
          g = 0;
          for (int y : cov.x_neighbors(x)) g += counts[static_cast<std::size_t>(y) * k + l] == 0;
        }
        gains[static_cast<std::size_t>(x) * k + l] = g;
      }
    }

    // Serial reduction in (x, label) order keeps the pick independent of the
    // scan's thread count.
    std::int64_t best = -1;
    for (int x : open) {
      for (int l = 0; l < k; ++l) best = std::max(best, gains[static_cast<std::size_t>(x) * k + l]);
    }
    int pick_x = -1;
    int pick_l = -1;
    if (options.tie_break_seed && best > 0) {
      std::vector<std::pair<int, int>> ties;
      for (int x : open) {
        for (int l = 0; l < k; ++l) {
          if (gains[static_cast<std::size_t>(x) * k + l] == best) ties.emplace_back(x, l);
        }
      }
      std::tie(pick_x, pick_l) = ties[uniform_below(rng, ties.size())];
    } else {
      for (int x : open) {
        for (int l = 0; l < k && pick_x < 0; ++l) {
          if (gains[static_cast<std::size_t>(x) * k + l] == best) {
            pick_x = x;
            pick_l = l;
          }
        }
        if (pick_x >= 0) break;
      }
    }

    f.set_mask(pick_x, f.mask(pick_x) | (LabelMask{1} << pick_l));
    for (int y : cov.x_neighbors(pick_x)) ++counts[static_cast<std::size_t>(y) * k + pick_l];
    objective += best;
    result.trace.push_back({++iteration, pick_x, pick_l + 1, best, objective});

    if (label_count(f.mask(pick_x)) == inst.sigma) std::erase(open, pick_x);
  }
  return result;
}

}  // namespace monsched
