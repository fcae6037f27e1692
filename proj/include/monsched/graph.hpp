#ifndef MONSCHED_GRAPH_HPP
#define MONSCHED_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace monsched {

using NodeId = int;
using EdgeId = int;

// Hop distance reported for nodes in another component.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Something that can fail and must be watched: a node or an edge.
struct Target {
  enum class Kind : std::uint8_t { node = 0, edge = 1 };
  Kind kind = Kind::node;
  int id = 0;

  static Target node(NodeId id) { return {Kind::node, id}; }
  static Target edge(EdgeId id) { return {Kind::edge, id}; }

  friend auto operator<=>(const Target&, const Target&) = default;
};

// Undirected simple graph with stable dense node and edge ids. Node names
// from input files are kept so outputs can echo them. Immutable once built;
// use GraphBuilder to make one.
class NetworkGraph {
 public:
  NetworkGraph() = default;

  int node_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& name(NodeId u) const { return names_.at(u); }
  std::optional<NodeId> find_node(std::string_view name) const;

  // Endpoints with first < second.
  std::pair<NodeId, NodeId> endpoints(EdgeId e) const { return edges_.at(e); }
  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;

  std::span<const NodeId> neighbors(NodeId u) const { return adjacency_.at(u); }
  int degree(NodeId u) const { return static_cast<int>(adjacency_.at(u).size()); }

  bool has_node(NodeId u) const { return u >= 0 && u < node_count(); }
  bool has_edge(EdgeId e) const { return e >= 0 && e < edge_count(); }

  // "a-b" for an edge, the node name for a node.
  std::string target_key(const Target& t) const;
  bool has_target(const Target& t) const;

  std::vector<Target> all_node_targets() const;
  std::vector<Target> all_edge_targets() const;

  // Convenience for fixtures: nodes are created in first-seen order.
  static NetworkGraph from_named_edges(
      const std::vector<std::pair<std::string, std::string>>& edges);
  // Nodes named "0".."n-1".
  static NetworkGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

 private:
  friend class GraphBuilder;

  static std::uint64_t pair_key(NodeId u, NodeId v);

  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
  std::vector<std::vector<NodeId>> adjacency_;
};

class GraphBuilder {
 public:
  // Returns the existing id if the name is already present.
  NodeId add_node(std::string name);
  // Throws InputError on self-loops, duplicates and unknown ids.
  EdgeId add_edge(NodeId u, NodeId v);
  EdgeId add_edge(std::string_view u, std::string_view v);

  bool has_edge(NodeId u, NodeId v) const;
  std::optional<NodeId> find_node(std::string_view name) const { return graph_.find_node(name); }
  int node_count() const { return graph_.node_count(); }

  NetworkGraph build() &&;

 private:
  NetworkGraph graph_;
};

// Hop counts from source; kUnreachable for other components.
std::vector<int> bfs_distances(const NetworkGraph& g, NodeId source);

// d(u, e) = max(d(u, i), d(u, j)) for e = (i, j).
int node_edge_distance(const NetworkGraph& g, NodeId u, EdgeId e);
int node_edge_distance(const NetworkGraph& g, std::span<const int> dist_from_u, EdgeId e);

int target_distance(const NetworkGraph& g, std::span<const int> dist_from_u, const Target& t);

// Targets within distance lambda of u, in input order.
std::vector<Target> covered_targets(const NetworkGraph& g, NodeId u, int lambda,
                                    std::span<const Target> targets);

}  // namespace monsched

#endif  // MONSCHED_GRAPH_HPP
