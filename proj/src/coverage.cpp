#include "monsched/coverage.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "monsched/errors.hpp"

namespace monsched {

std::string_view to_string(Objective objective) {
  return objective == Objective::detection ? "detection" : "isolation";
}

Objective parse_objective(std::string_view text) {
  if (text == "detection") return Objective::detection;
  if (text == "isolation") return Objective::isolation;
  throw InputError("unknown objective '" + std::string(text) +
                   "' (expected detection or isolation)");
}

TargetPair TargetPair::make(Target a, Target b) {
  if (a == b) throw InputError("target pair needs two distinct targets");
  if (b < a) std::swap(a, b);
  return {a, b};
}

bool CoverageGraph::covers(int x, int y) const {
  const auto& nbrs = x_adj_.at(x);
  return std::binary_search(nbrs.begin(), nbrs.end(), y);
}

void CoverageGraph::finalize() {
  y_adj_.assign(y_keys_.size(), {});
  edge_count_ = 0;
  for (int x = 0; x < x_count(); ++x) {
    for (int y : x_adj_[x]) y_adj_[y].push_back(x);
    edge_count_ += x_adj_[x].size();
  }
}

CoverageGraph CoverageGraph::from_adjacency(int y_count,
                                            std::vector<std::vector<int>> x_adjacency,
                                            Objective objective) {
  CoverageGraph cg;
  cg.objective_ = objective;
  for (int y = 0; y < y_count; ++y) cg.y_keys_.push_back("y" + std::to_string(y));
  for (std::size_t x = 0; x < x_adjacency.size(); ++x) {
    auto& nbrs = x_adjacency[x];
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    for (int y : nbrs) {
      if (y < 0 || y >= y_count) throw InputError("coverage adjacency out of range");
    }
    cg.x_names_.push_back("x" + std::to_string(x));
    cg.x_nodes_.push_back(-1);
  }
  cg.x_adj_ = std::move(x_adjacency);
  cg.finalize();
  return cg;
}

CoverageGraph CoverageGraph::restrict_x(std::span<const int> xs) const {
  CoverageGraph cg;
  cg.objective_ = objective_;
  cg.y_keys_ = y_keys_;
  for (int x : xs) {
    if (x < 0 || x >= x_count()) throw InputError("restrict_x: x index out of range");
    cg.x_nodes_.push_back(x_nodes_[x]);
    cg.x_names_.push_back(x_names_[x]);
    cg.x_adj_.push_back(x_adj_[x]);
  }
  cg.finalize();
  return cg;
}

std::string CoverageGraph::to_text() const {
  std::string out;
  for (int x = 0; x < x_count(); ++x) {
    out += x_names_[x];
    out += ':';
    bool first = true;
    for (int y : x_adj_[x]) {
      out += first ? " " : ",";
      out += y_keys_[y];
      first = false;
    }
    out += '\n';
  }
  return out;
}

namespace {

void check_inputs(const NetworkGraph& g, std::span<const NodeId> sensors,
                  std::span<const Target> targets, int lambda) {
  if (lambda < 0) throw InputError("range lambda must be non-negative");
  if (sensors.empty()) throw InputError("sensor set is empty");
  if (targets.empty()) throw InputError("target set is empty");
  std::set<NodeId> seen_s;
  for (NodeId s : sensors) {
    if (!g.has_node(s)) throw InputError("unknown sensor node id " + std::to_string(s));
    if (!seen_s.insert(s).second) throw InputError("duplicate sensor '" + g.name(s) + "'");
  }
  std::set<Target> seen_t;
  for (const Target& t : targets) {
    if (!g.has_target(t)) throw InputError("target refers to a missing node or edge");
    if (!seen_t.insert(t).second) throw InputError("duplicate target '" + g.target_key(t) + "'");
  }
}

// covered[i] for every target, from one BFS.
std::vector<char> coverage_row(const NetworkGraph& g, NodeId s, std::span<const Target> targets,
                               int lambda) {
  const auto dist = bfs_distances(g, s);
  std::vector<char> row(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    row[i] = target_distance(g, dist, targets[i]) <= lambda ? 1 : 0;
  }
  return row;
}

}  // namespace

CoverageGraph build_detection(const NetworkGraph& g, std::span<const NodeId> sensors,
                              std::span<const Target> targets, int lambda, Exec exec) {
  check_inputs(g, sensors, targets, lambda);
  CoverageGraph cg;
  cg.objective_ = Objective::detection;
  for (const Target& t : targets) cg.y_keys_.push_back(g.target_key(t));
  for (NodeId s : sensors) {
    cg.x_nodes_.push_back(s);
    cg.x_names_.push_back(g.name(s));
  }
  const int nx = static_cast<int>(sensors.size());
  cg.x_adj_.assign(nx, {});
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int x = 0; x < nx; ++x) {
    const auto row = coverage_row(g, sensors[x], targets, lambda);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i]) cg.x_adj_[x].push_back(static_cast<int>(i));
    }
  }
  cg.finalize();
  return cg;
}

CoverageGraph build_isolation(const NetworkGraph& g, std::span<const NodeId> sensors,
                              std::span<const Target> targets, int lambda, Exec exec,
                              std::size_t pair_warn_threshold, std::ostream* warn) {
  if (targets.size() < 2) throw InputError("isolation needs at least two targets");
  check_inputs(g, sensors, targets, lambda);
  std::vector<Target> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  const std::size_t pairs = m * (m - 1) / 2;
  if (warn != nullptr && pairs > pair_warn_threshold) {
    *warn << "warning: isolation coverage materialises " << pairs << " target pairs\n";
  }

  CoverageGraph cg;
  cg.objective_ = Objective::isolation;
  cg.y_keys_.reserve(pairs);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      cg.y_keys_.push_back(g.target_key(sorted[i]) + "|" + g.target_key(sorted[j]));
    }
  }
  for (NodeId s : sensors) {
    cg.x_nodes_.push_back(s);
    cg.x_names_.push_back(g.name(s));
  }
  const int nx = static_cast<int>(sensors.size());
  cg.x_adj_.assign(nx, {});
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int x = 0; x < nx; ++x) {
    const auto row = coverage_row(g, sensors[x], sorted, lambda);
    int y = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j, ++y) {
        if (row[i] != row[j]) cg.x_adj_[x].push_back(y);
      }
    }
  }
  cg.finalize();
  return cg;
}

CoverageGraph build_coverage(Objective objective, const NetworkGraph& g,
                             std::span<const NodeId> sensors, std::span<const Target> targets,
                             int lambda, Exec exec) {
  if (objective == Objective::detection) return build_detection(g, sensors, targets, lambda, exec);
  return build_isolation(g, sensors, targets, lambda, exec);
}

}  // namespace monsched
