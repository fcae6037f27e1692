#include <doctest.h>

#include "monsched/domination.hpp"
#include "monsched/errors.hpp"
#include "monsched/instance_io.hpp"
#include "monsched/verify.hpp"
#include "support.hpp"

using namespace monsched;
using testing_support::path4;

namespace {

NetworkGraph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return NetworkGraph::from_edges(n, e);
}

NetworkGraph star4() {
  return NetworkGraph::from_named_edges({{"c", "l1"}, {"c", "l2"}, {"c", "l3"}, {"c", "l4"}});
}

NetworkGraph petersen() { return load_instance(testing_support::data_path("petersen.inst")).graph; }

std::vector<NodeId> ids(const NetworkGraph& g, std::initializer_list<const char*> names) {
  std::vector<NodeId> out;
  for (auto n : names) out.push_back(*g.find_node(n));
  return out;
}

// Largest number of disjoint dominating sets by trying every assignment of
// nodes to colours; nodes may also stay unused (colour 0).
int brute_domatic(const NetworkGraph& g) {
  const int n = g.node_count();
  int best = 1;
  for (int d = 2; d <= n; ++d) {
    std::vector<int> colour(n, 0);
    bool found = false;
    auto rec = [&](auto&& self, int v) -> void {
      if (found) return;
      if (v == n) {
        for (int c = 1; c <= d; ++c) {
          std::vector<NodeId> set;
          for (int u = 0; u < n; ++u) if (colour[u] == c) set.push_back(u);
          if (!is_dominating(g, set)) return;
        }
        found = true;
        return;
      }
      for (int c = 0; c <= d; ++c) {
        colour[v] = c;
        self(self, v + 1);
      }
    };
    rec(rec, 0);
    if (!found) break;
    best = d;
  }
  return best;
}

}  // namespace

TEST_CASE("dominating sets on the path") {
  const NetworkGraph g = path4();
  std::vector<NodeId> all{0, 1, 2, 3};
  CHECK(is_dominating(g, all));
  CHECK(is_dominating(g, ids(g, {"2", "3"})));
  CHECK(is_dominating(g, ids(g, {"1", "4"})));
  CHECK_FALSE(is_dominating(g, ids(g, {"1"})));
  CHECK_FALSE(is_dominating(g, {}));
}

TEST_CASE("greedy domatic partitions") {
  SUBCASE("complete graph gives singletons") {
    const auto dp = greedy_domatic_partition(complete(4));
    CHECK(dp.sets.size() == 4);
    for (const auto& s : dp.sets) CHECK(s.size() == 1);
  }
  SUBCASE("path gives two sets") {
    const NetworkGraph g = path4();
    const auto dp = greedy_domatic_partition(g);
    CHECK(dp.sets.size() == 2);
    validate_partition(g, dp);
  }
  SUBCASE("star gives the centre and the leaves") {
    const NetworkGraph g = star4();
    const auto dp = greedy_domatic_partition(g);
    REQUIRE(dp.sets.size() == 2);
    CHECK(dp.sets[0] == ids(g, {"c"}));
    CHECK(exact_domatic_number(g) == 2);
  }
}

TEST_CASE("greedy partitions are valid and never beat the exact count") {
  Rng rng(6);
  for (int t = 0; t < 40; ++t) {
    const NetworkGraph g = random_graph(rng, 3 + t % 6, 0.5);
    const int exact = exact_domatic_number(g);
    CHECK(exact == brute_domatic(g));
    for (auto seed : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{t}}) {
      const auto dp = greedy_domatic_partition(g, seed);
      validate_partition(g, dp);
      CHECK(static_cast<int>(dp.sets.size()) <= exact);
    }
  }
  CHECK_THROWS_AS(exact_domatic_number(complete(13)), ResourceRefusal);
}

TEST_CASE("partition validation") {
  const NetworkGraph g = path4();
  CHECK_THROWS_AS(validate_partition(g, {{ids(g, {"1"})}}), InputError);
  CHECK_THROWS_AS(validate_partition(g, {{ids(g, {"2", "3"}), ids(g, {"3", "4", "1"})}}), InputError);
}

TEST_CASE("configurations from domatic partitions") {
  const NetworkGraph g = path4();
  const DomaticPartition dp{{ids(g, {"2", "4"}), ids(g, {"1", "3"})}};
  const auto cfg = config_from_domatic(g, dp, 2);
  CHECK(cfg.k == 4);
  CHECK(verify_config(g, cfg).valid);
  CHECK(cfg.labels[*g.find_node("2")] == 0b0011);
  CHECK(cfg.labels[*g.find_node("1")] == 0b1100);

  const auto single = config_from_domatic(g, dp, 1);
  CHECK(single.labels[*g.find_node("4")] == 0b01);
  CHECK(single.labels[*g.find_node("3")] == 0b10);

  const NetworkGraph k4 = complete(4);
  const auto big = config_from_domatic(k4, greedy_domatic_partition(k4), 2);
  CHECK(big.k == 8);
  CHECK(verify_config(k4, big).valid);
}

TEST_CASE("verify_config reports violations") {
  const NetworkGraph g = path4();
  KSigmaConfig full{3, 3, std::vector<LabelMask>(4, 0b111)};
  CHECK(verify_config(g, full).valid);

  const DomaticPartition dp{{ids(g, {"2", "4"}), ids(g, {"1", "3"})}};
  KSigmaConfig cfg = config_from_domatic(g, dp, 1);
  // Label 1 survives only on node 4, which nodes 1 and 2 cannot see.
  cfg.labels[*g.find_node("2")] = 0b10;
  const auto check = verify_config(g, cfg);
  CHECK_FALSE(check.valid);
  CHECK(check.violations == std::vector<ConfigViolation>{{*g.find_node("1"), 1}, {*g.find_node("2"), 1}});

  cfg.labels[0] = 0b11;
  CHECK_THROWS_AS(verify_config(g, cfg), ValidationError);
}

TEST_CASE("config search") {
  SUBCASE("fast path") {
    const NetworkGraph g = path4();
    const auto r = search_config(g, 4, 2);
    CHECK(r.outcome == SearchOutcome::found);
    CHECK(r.method == "domatic");
    CHECK(verify_config(g, *r.config).valid);
  }
  SUBCASE("Petersen graph has a (5,2) configuration") {
    const NetworkGraph g = petersen();
    const auto r = search_config(g, 5, 2);
    REQUIRE(r.outcome == SearchOutcome::found);
    CHECK(verify_config(g, *r.config).valid);
    const auto inst = domination_instance(g, 5, 2);
    const auto rep = score(inst, config_to_labeling(*r.config));
    CHECK(rep.score == Fraction(1, 1));
    for (auto c : rep.per_slot_covered) CHECK(c == 10);
  }
  SUBCASE("exhaustive search proves nonexistence") {
    const NetworkGraph g = path4();
    const auto r = search_config(g, 9, 2);
    CHECK(r.outcome == SearchOutcome::nonexistent);
    CHECK(r.method == "exhaustive");
    CHECK_FALSE(r.config.has_value());
  }
  SUBCASE("stochastic search never claims nonexistence") {
    const NetworkGraph g = petersen();
    SearchOptions opt;
    opt.budget = 200;
    const auto r = search_config(g, 7, 2, opt);
    CHECK(r.outcome == SearchOutcome::not_found_within_budget);
  }
}
