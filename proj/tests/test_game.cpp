#include <doctest.h>

#include <numeric>

#include "monsched/errors.hpp"
#include "monsched/game.hpp"
#include "monsched/oracle.hpp"
#include "monsched/verify.hpp"
#include "support.hpp"

using namespace monsched;
using testing_support::path_fixture;

TEST_CASE("potential on the path fixture") {
  const auto inst = path_fixture();
  GameState st(inst.coverage, 2, {0b01, 0b10});
  CHECK(potential(st) == 4);
  GameState empty(inst.coverage, 2, {0, 0});
  CHECK(potential(empty) == 0);
}

TEST_CASE("utility counts labels a device alone provides") {
  // x0 holds {3,5} and reaches y0, y1; x1 holds {1,3} and reaches y0.
  const auto cov = CoverageGraph::from_adjacency(2, {{0, 1}, {0}});
  GameState st(cov, 5, {0b10100, 0b00101});
  CHECK(utility(st, 0) == 3);
  CHECK(utility(st, 1) == 1);
}

TEST_CASE("utility of an isolated or sole device") {
  const auto cov = CoverageGraph::from_adjacency(3, {{}, {0, 1, 2}});
  GameState st(cov, 4, {0b0011, 0b0110});
  CHECK(utility(st, 0) == 0);
  CHECK(utility(st, 1) == 6);
}

TEST_CASE("potential identity on the path fixture") {
  const auto inst = path_fixture();
  GameState st(inst.coverage, 2, {0b01, 0b10});
  auto d = check_potential_identity(st, 0, 0b10);
  CHECK(d.delta_utility == -1);
  CHECK(d.delta_potential == -1);
  d = check_potential_identity(st, 1, 0b10);
  CHECK(d.delta_utility == 0);
  CHECK(d.delta_potential == 0);
}

TEST_CASE("potential identity suite") {
  const SuiteResult r = potential_game_suite(123, 20, 50);
  CHECK(r.checks == 1000);
  CHECK(r.failures == 0);
}

TEST_CASE("placement moves keep the caches consistent") {
  Rng rng(4);
  const NetworkGraph g = random_graph(rng, 12, 0.3);
  std::vector<NodeId> all(g.node_count());
  std::iota(all.begin(), all.end(), 0);
  const auto cov = build_detection(g, all, g.all_node_targets(), 1);
  GameState st(cov, 4, {0, 5, 9}, {0b0011, 0b0101, 0b1100});
  CHECK(st.site_occupied(5));
  CHECK_FALSE(st.site_occupied(1));
  st.move(1, 1, 0b1001);
  CHECK(st.site_occupied(1));
  CHECK_FALSE(st.site_occupied(5));
  CHECK(st.audit());
  CHECK(st.potential() == labeling_potential(cov, st.site_labeling()));
  CHECK_THROWS(st.move(0, 9, 0b0011));
}

TEST_CASE("acceptance rule direction") {
  CHECK(acceptance_probability(2, 5, 0.015, Acceptance::log_linear) > 0.99);
  CHECK(acceptance_probability(5, 2, 0.015, Acceptance::log_linear) < 0.01);
  CHECK(acceptance_probability(3, 3, 0.015, Acceptance::log_linear) == doctest::Approx(0.5));
  CHECK(acceptance_probability(2, 5, 0.015, Acceptance::printed) < 0.01);
  CHECK(acceptance_probability(0, 100000, 0.015, Acceptance::log_linear) == 1.0);
}

TEST_CASE("BLLL finds the path optimum") {
  const auto inst = path_fixture();
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    BlllParams p;
    p.iterations = 2000;
    p.seed = seed;
    const BlllResult r = blll_schedule(inst, p);
    hits += score(inst, r.final_labeling).score == Fraction(2, 3);
    CHECK(r.best_potential == 4);
  }
  CHECK(hits >= 95);
}

TEST_CASE("BLLL with sigma equal to k stays at the maximum") {
  const auto inst = path_fixture(3, 3);
  BlllParams p;
  p.iterations = 500;
  const BlllResult r = blll_schedule(inst, p);
  for (const auto& t : r.trace) CHECK(t.potential == 9);
}

TEST_CASE("BLLL with one player settles on its best action") {
  const auto cov = CoverageGraph::from_adjacency(3, {{0, 2}});
  const ProblemInstance inst(cov, 4, 2);
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    BlllParams p;
    p.iterations = 200;
    p.epsilon = 0.001;
    p.seed = seed;
    hits += blll_schedule(inst, p).final_potential == 4;
  }
  CHECK(hits >= 49);
}

TEST_CASE("BLLL trace is reproducible and best-seen never drops") {
  Rng rng(9);
  RandomInstanceSpec spec;
  spec.max_k = 8;
  spec.max_actions = 100;
  const auto inst = random_instance(rng, spec);
  BlllParams p;
  p.iterations = 3000;
  p.seed = 77;
  p.trace_stride = 10;
  const BlllResult a = blll_schedule(inst, p);
  const BlllResult b = blll_schedule(inst, p);
  CHECK(a.final_labeling == b.final_labeling);
  REQUIRE(a.trace.size() == b.trace.size());
  std::int64_t prev = 0;
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].potential == b.trace[i].potential);
    CHECK(a.trace[i].best_potential >= prev);
    CHECK(a.trace[i].best_potential >= a.trace[i].potential);
    prev = a.trace[i].best_potential;
  }
  CHECK(labeling_potential(inst.coverage, a.best_labeling) == a.best_potential);
  CHECK(labeling_potential(inst.coverage, a.final_labeling) == a.final_potential);
}

TEST_CASE("BLLL parameter checks") {
  BlllParams p;
  p.epsilon = 1.5;
  CHECK_THROWS_AS(p.validate(), InputError);
  p.epsilon = 0.1;
  p.iterations = -1;
  CHECK_THROWS_AS(p.validate(), InputError);
}

TEST_CASE("joint placement picks the star centre") {
  const NetworkGraph g = NetworkGraph::from_named_edges({{"c", "l1"}, {"c", "l2"}, {"c", "l3"}, {"c", "l4"}});
  std::vector<NodeId> all(5);
  std::iota(all.begin(), all.end(), 0);
  const ProblemInstance inst(build_detection(g, all, g.all_node_targets(), 1), 1, 1);
  const std::vector<int> sites{0, 1, 2, 3, 4};
  BlllParams p;
  p.iterations = 2000;
  const PlacementResult r = blll_place_and_schedule(inst, sites, 1, p);
  CHECK(r.best_sites == std::vector<int>{*g.find_node("c")});
  CHECK(r.best_potential == 5);
  CHECK(r.final_sites == std::vector<int>{*g.find_node("c")});
  const auto two = two_stage_place_and_schedule(inst, sites, 1, p);
  CHECK(two.best_sites == r.best_sites);
}

TEST_CASE("forced placement behaves like plain scheduling") {
  const auto inst = path_fixture();
  const std::vector<int> sites{0, 1};
  BlllParams p;
  p.iterations = 2000;
  const PlacementResult joint = blll_place_and_schedule(inst, sites, 2, p);
  const PlacementResult two = two_stage_place_and_schedule(inst, sites, 2, p);
  auto sorted = [](std::vector<int> v) { std::sort(v.begin(), v.end()); return v; };
  CHECK(sorted(joint.best_sites) == sites);
  CHECK(sorted(two.best_sites) == sites);
  CHECK(joint.best_potential == 4);
  CHECK(two.best_potential == 4);
}

TEST_CASE("greedy max coverage placement") {
  const auto cov = CoverageGraph::from_adjacency(5, {{0, 1}, {0, 1, 2}, {3, 4}, {2}});
  const std::vector<int> sites{0, 1, 2, 3};
  CHECK(greedy_max_coverage_placement(cov, sites, 2) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(greedy_max_coverage_placement(cov, sites, 5), InputError);
}
