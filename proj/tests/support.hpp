#ifndef MONSCHED_TESTS_SUPPORT_HPP
#define MONSCHED_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "monsched/coverage.hpp"
#include "monsched/graph.hpp"
#include "monsched/schedule.hpp"

namespace testing_support {

using namespace monsched;

inline std::string data_path(const std::string& name) { return std::string(MONSCHED_DATA_DIR) + "/" + name; }

// Path 1-2-3-4, devices on 2 and 3, every edge a target, range 1.
inline NetworkGraph path4() { return NetworkGraph::from_named_edges({{"1", "2"}, {"2", "3"}, {"3", "4"}}); }

inline ProblemInstance path_fixture(int k = 2, int sigma = 1, Objective obj = Objective::detection) {
  static const NetworkGraph g = path4();
  const std::vector<NodeId> sensors{*g.find_node("2"), *g.find_node("3")};
  const auto targets = g.all_edge_targets();
  return ProblemInstance(build_coverage(obj, g, sensors, targets, 1), k, sigma);
}

// All-pairs hop counts by Floyd-Warshall, independent of the BFS in the library.
inline std::vector<std::vector<int>> floyd(const NetworkGraph& g) {
  const int n = g.node_count();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int u = 0; u < n; ++u) d[u][u] = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    d[a][b] = d[b][a] = 1;
  }
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
  return d;
}

// Sum over slots of targets covered, straight from the schedule definition.
inline std::int64_t naive_potential(const CoverageGraph& cov, const Labeling& l) {
  std::int64_t total = 0;
  for (int j = 1; j <= l.k(); ++j) {
    for (int y = 0; y < cov.y_count(); ++y) {
      bool hit = false;
      for (int x = 0; x < cov.x_count() && !hit; ++x) hit = l.has_label(x, j) && cov.covers(x, y);
      total += hit;
    }
  }
  return total;
}

// Best potential by plain recursion over every exactly-sigma labeling.
inline std::int64_t naive_best_potential(const ProblemInstance& inst) {
  std::vector<LabelMask> subsets;
  for (LabelMask m = 0; m < (LabelMask{1} << inst.k); ++m) {
    if (label_count(m) == inst.sigma) subsets.push_back(m);
  }
  Labeling l(inst.coverage.x_count(), inst.k);
  std::int64_t best = -1;
  auto rec = [&](auto&& self, int x) -> void {
    if (x == l.size()) {
      best = std::max(best, naive_potential(inst.coverage, l));
      return;
    }
    for (LabelMask m : subsets) {
      l.set_mask(x, m);
      self(self, x + 1);
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace testing_support

#endif  // MONSCHED_TESTS_SUPPORT_HPP
