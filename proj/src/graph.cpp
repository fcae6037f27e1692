#include "monsched/graph.hpp"

#include <algorithm>
#include <deque>

#include "monsched/errors.hpp"

namespace monsched {

std::uint64_t NetworkGraph::pair_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

std::optional<NodeId> NetworkGraph::find_node(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> NetworkGraph::find_edge(NodeId u, NodeId v) const {
  auto it = edge_index_.find(pair_key(u, v));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::string NetworkGraph::target_key(const Target& t) const {
  if (t.kind == Target::Kind::node) return name(t.id);
  const auto [a, b] = endpoints(t.id);
  return name(a) + "-" + name(b);
}

bool NetworkGraph::has_target(const Target& t) const {
  return t.kind == Target::Kind::node ? has_node(t.id) : has_edge(t.id);
}

std::vector<Target> NetworkGraph::all_node_targets() const {
  std::vector<Target> out;
  out.reserve(names_.size());
  for (NodeId u = 0; u < node_count(); ++u) out.push_back(Target::node(u));
  return out;
}

std::vector<Target> NetworkGraph::all_edge_targets() const {
  std::vector<Target> out;
  out.reserve(edges_.size());
  for (EdgeId e = 0; e < edge_count(); ++e) out.push_back(Target::edge(e));
  return out;
}

NetworkGraph NetworkGraph::from_named_edges(
    const std::vector<std::pair<std::string, std::string>>& edges) {
  GraphBuilder b;
  for (const auto& [u, v] : edges) {
    b.add_node(u);
    b.add_node(v);
    b.add_edge(u, v);
  }
  return std::move(b).build();
}

NetworkGraph NetworkGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_node(std::to_string(i));
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

NodeId GraphBuilder::add_node(std::string name) {
  if (auto id = graph_.find_node(name)) return *id;
  const NodeId id = graph_.node_count();
  graph_.index_.emplace(name, id);
  graph_.names_.push_back(std::move(name));
  graph_.adjacency_.emplace_back();
  return id;
}

bool GraphBuilder::has_edge(NodeId u, NodeId v) const { return graph_.find_edge(u, v).has_value(); }

EdgeId GraphBuilder::add_edge(NodeId u, NodeId v) {
  if (!graph_.has_node(u) || !graph_.has_node(v)) {
    throw InputError("edge references unknown node id");
  }
  if (u == v) throw InputError("self-loop on node '" + graph_.name(u) + "'");
  if (has_edge(u, v)) {
    throw InputError("duplicate edge '" + graph_.name(u) + "-" + graph_.name(v) + "'");
  }
  const EdgeId id = graph_.edge_count();
  graph_.edges_.emplace_back(std::min(u, v), std::max(u, v));
  graph_.edge_index_.emplace(NetworkGraph::pair_key(u, v), id);
  graph_.adjacency_[u].push_back(v);
  graph_.adjacency_[v].push_back(u);
  return id;
}

EdgeId GraphBuilder::add_edge(std::string_view u, std::string_view v) {
  auto a = graph_.find_node(u);
  if (!a) throw InputError("unknown node '" + std::string(u) + "'");
  auto b = graph_.find_node(v);
  if (!b) throw InputError("unknown node '" + std::string(v) + "'");
  return add_edge(*a, *b);
}

NetworkGraph GraphBuilder::build() && {
  for (auto& nbrs : graph_.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return std::move(graph_);
}

std::vector<int> bfs_distances(const NetworkGraph& g, NodeId source) {
  if (!g.has_node(source)) throw InputError("unknown source node id " + std::to_string(source));
  std::vector<int> dist(g.node_count(), kUnreachable);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int node_edge_distance(const NetworkGraph& g, std::span<const int> dist_from_u, EdgeId e) {
  if (!g.has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
  const auto [a, b] = g.endpoints(e);
  return std::max(dist_from_u[a], dist_from_u[b]);
}

int node_edge_distance(const NetworkGraph& g, NodeId u, EdgeId e) {
  if (!g.has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
  return node_edge_distance(g, bfs_distances(g, u), e);
}

int target_distance(const NetworkGraph& g, std::span<const int> dist_from_u, const Target& t) {
  if (t.kind == Target::Kind::node) {
    if (!g.has_node(t.id)) throw InputError("unknown target node id " + std::to_string(t.id));
    return dist_from_u[t.id];
  }
  return node_edge_distance(g, dist_from_u, t.id);
}

std::vector<Target> covered_targets(const NetworkGraph& g, NodeId u, int lambda,
                                    std::span<const Target> targets) {
  if (lambda < 0) throw InputError("range must be non-negative");
  const auto dist = bfs_distances(g, u);
  std::vector<Target> out;
  for (const Target& t : targets) {
    if (target_distance(g, dist, t) <= lambda) out.push_back(t);
  }
  return out;
}

}  // namespace monsched
