#include <doctest.h>

#include "monsched/errors.hpp"
#include "monsched/graph.hpp"
#include "monsched/verify.hpp"
#include "support.hpp"

using namespace monsched;
using testing_support::floyd;
using testing_support::path4;

namespace {

int id(const NetworkGraph& g, const char* name) { return *g.find_node(name); }

}  // namespace

TEST_CASE("bfs distances on a path") {
  const NetworkGraph g = path4();
  const auto d = bfs_distances(g, id(g, "2"));
  CHECK(d[id(g, "1")] == 1);
  CHECK(d[id(g, "2")] == 0);
  CHECK(d[id(g, "3")] == 1);
  CHECK(d[id(g, "4")] == 2);
}

TEST_CASE("bfs from an isolated node") {
  GraphBuilder b;
  b.add_node("solo");
  const NetworkGraph g = std::move(b).build();
  CHECK(bfs_distances(g, 0) == std::vector<int>{0});
}

TEST_CASE("bfs leaves other components unreachable") {
  const NetworkGraph g = NetworkGraph::from_named_edges({{"1", "2"}, {"3", "4"}});
  const auto d = bfs_distances(g, id(g, "1"));
  CHECK(d[id(g, "2")] == 1);
  CHECK(d[id(g, "3")] == kUnreachable);
  CHECK(d[id(g, "4")] == kUnreachable);
}

TEST_CASE("node to edge distance takes the far endpoint") {
  const NetworkGraph g = path4();
  const int u = id(g, "2");
  CHECK(node_edge_distance(g, u, *g.find_edge(id(g, "1"), id(g, "2"))) == 1);
  CHECK(node_edge_distance(g, u, *g.find_edge(id(g, "3"), id(g, "4"))) == 2);
  CHECK(node_edge_distance(g, u, *g.find_edge(id(g, "2"), id(g, "3"))) == 1);
}

TEST_CASE("edge in another component is unreachable") {
  const NetworkGraph g = NetworkGraph::from_named_edges({{"1", "2"}, {"3", "4"}});
  CHECK(node_edge_distance(g, id(g, "1"), *g.find_edge(id(g, "3"), id(g, "4"))) == kUnreachable);
}

TEST_CASE("covered targets") {
  const NetworkGraph g = path4();
  const int u = id(g, "2");

  SUBCASE("range 1 over all edges") {
    const auto got = covered_targets(g, u, 1, g.all_edge_targets());
    REQUIRE(got.size() == 2);
    CHECK(g.target_key(got[0]) == "1-2");
    CHECK(g.target_key(got[1]) == "2-3");
  }
  SUBCASE("range 0 covers the node itself only") {
    const auto all = g.all_node_targets();
    CHECK(covered_targets(g, u, 0, all) == std::vector<Target>{Target::node(u)});
    const std::vector<Target> others{Target::node(id(g, "1")), Target::node(id(g, "4"))};
    CHECK(covered_targets(g, u, 0, others).empty());
  }
  SUBCASE("range past the diameter covers everything") {
    auto targets = g.all_node_targets();
    const auto edges = g.all_edge_targets();
    targets.insert(targets.end(), edges.begin(), edges.end());
    CHECK(covered_targets(g, u, 4, targets) == targets);
  }
}

TEST_CASE("covered targets agree with Floyd-Warshall on random graphs") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const NetworkGraph g = random_graph(rng, 9, 0.3);
    const auto d = floyd(g);
    const auto nodes = g.all_node_targets();
    const auto edges = g.all_edge_targets();
    for (int lambda = 0; lambda <= 3; ++lambda) {
      for (int u = 0; u < g.node_count(); ++u) {
        std::vector<Target> want;
        for (const auto& t : nodes) if (d[u][t.id] <= lambda) want.push_back(t);
        CHECK(covered_targets(g, u, lambda, nodes) == want);
        want.clear();
        for (const auto& t : edges) {
          auto [a, b] = g.endpoints(t.id);
          if (std::max(d[u][a], d[u][b]) <= lambda) want.push_back(t);
        }
        CHECK(covered_targets(g, u, lambda, edges) == want);
      }
    }
  }
}

TEST_CASE("builder rejects self loops and duplicate edges") {
  GraphBuilder b;
  b.add_node("a");
  b.add_node("b");
  b.add_edge("a", "b");
  CHECK_THROWS_AS(b.add_edge("a", "zz"), InputError);
  CHECK_THROWS_AS(b.add_edge("a", "a"), InputError);
  CHECK_THROWS_AS(b.add_edge("b", "a"), InputError);
  CHECK(b.add_node("a") == 0);
}

TEST_CASE("graph accessors") {
  const NetworkGraph g = path4();
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(id(g, "2")) == 2);
  CHECK_FALSE(g.find_node("9").has_value());
  CHECK_FALSE(g.find_edge(id(g, "1"), id(g, "4")).has_value());
  const auto e = *g.find_edge(id(g, "3"), id(g, "2"));
  CHECK(g.endpoints(e).first < g.endpoints(e).second);
}
