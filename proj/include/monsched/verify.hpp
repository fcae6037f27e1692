#ifndef MONSCHED_VERIFY_HPP
#define MONSCHED_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "monsched/exec.hpp"
#include "monsched/graph.hpp"
#include "monsched/rng.hpp"
#include "monsched/schedule.hpp"

namespace monsched {

// Randomised property suites shared by the `verify` command and the
// acceptance tests.

struct SuiteResult {
  std::string name;
  std::int64_t instances = 0;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::vector<std::string> failure_details;  // first few only
  bool passed() const { return failures == 0 && checks > 0; }
};

struct RandomInstanceSpec {
  int min_nodes = 5;
  int max_nodes = 10;
  double edge_probability = 0.35;
  int max_sensors = 6;
  int max_lambda = 2;
  int max_k = 6;
  // Skip (k, sigma) with C(k, sigma) above this.
  std::uint64_t max_actions = 15;
  bool allow_isolation = true;
};

NetworkGraph random_graph(Rng& rng, int n, double p);
// ER graph with every edge that would close a triangle rejected.
NetworkGraph random_triangle_free_graph(Rng& rng, int n, double p);
ProblemInstance random_instance(Rng& rng, const RandomInstanceSpec& spec,
                                Exec exec = Exec::parallel);
// Exactly-sigma labeling, uniform per device.
Labeling random_full_labeling(Rng& rng, int x_count, int k, int sigma);
// Any labeling with at most sigma labels per device.
Labeling random_partial_labeling(Rng& rng, int x_count, int k, int sigma);

// Delta U == Delta phi on random unilateral deviations, schedule and
// placement modes (half each).
SuiteResult potential_game_suite(std::uint64_t seed, int instances, int deviations_per_instance);

// sum_y |F(y)| == sum_j |N(S_j)| and score from both forms.
SuiteResult proposition1_suite(std::uint64_t seed, int instances, int labelings_per_instance);

// reduction_check on random triangle-free graphs with 3..max_nodes nodes.
SuiteResult reduction_suite(std::uint64_t seed, int graphs, int max_nodes,
                            int per_labeling_max_nodes);

}  // namespace monsched

#endif  // MONSCHED_VERIFY_HPP
