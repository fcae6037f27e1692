#ifndef MONSCHED_COVERAGE_HPP
#define MONSCHED_COVERAGE_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monsched/exec.hpp"
#include "monsched/graph.hpp"

namespace monsched {

enum class Objective { detection, isolation };

std::string_view to_string(Objective objective);
Objective parse_objective(std::string_view text);

// Unordered pair of distinct targets, stored with first < second.
struct TargetPair {
  Target first;
  Target second;

  static TargetPair make(Target a, Target b);
  friend auto operator<=>(const TargetPair&, const TargetPair&) = default;
};

// Bipartite graph between device locations (X) and the things they cover
// (Y): single targets for detection, target pairs for isolation. Both
// adjacency directions are sorted ascending.
class CoverageGraph {
 public:
  CoverageGraph() = default;

  // Builds from an explicit X -> Y adjacency. Names default to indices.
  static CoverageGraph from_adjacency(int y_count, std::vector<std::vector<int>> x_adjacency,
                                      Objective objective = Objective::detection);

  Objective objective() const { return objective_; }
  int x_count() const { return static_cast<int>(x_adj_.size()); }
  int y_count() const { return static_cast<int>(y_adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const int> x_neighbors(int x) const { return x_adj_.at(x); }
  std::span<const int> y_neighbors(int y) const { return y_adj_.at(y); }
  bool covers(int x, int y) const;

  const std::string& x_name(int x) const { return x_names_.at(x); }
  const std::string& y_key(int y) const { return y_keys_.at(y); }
  // Network node behind device slot x (-1 when built from raw adjacency).
  NodeId x_node(int x) const { return x_nodes_.at(x); }
  const std::vector<std::string>& x_names() const { return x_names_; }

  // Keeps only the listed X vertices, in the given order; Y is unchanged.
  CoverageGraph restrict_x(std::span<const int> xs) const;

  // One line per x: "name: key,key,...".
  std::string to_text() const;

 private:
  friend CoverageGraph build_detection(const NetworkGraph&, std::span<const NodeId>,
                                       std::span<const Target>, int, Exec);
  friend CoverageGraph build_isolation(const NetworkGraph&, std::span<const NodeId>,
                                       std::span<const Target>, int, Exec, std::size_t,
                                       std::ostream*);
  void finalize();

  Objective objective_ = Objective::detection;
  std::vector<NodeId> x_nodes_;
  std::vector<std::string> x_names_;
  std::vector<std::string> y_keys_;
  std::vector<std::vector<int>> x_adj_;
  std::vector<std::vector<int>> y_adj_;
  std::size_t edge_count_ = 0;
};

inline constexpr std::size_t kDefaultPairWarnThreshold = 5'000'000;

// x ~ y iff the device at x is within lambda of target y. Y keeps the order
// of `targets`.
CoverageGraph build_detection(const NetworkGraph& g, std::span<const NodeId> sensors,
                              std::span<const Target> targets, int lambda,
                              Exec exec = Exec::parallel);

// x ~ {a, b} iff the device at x covers exactly one of a, b. Targets are
// sorted by (kind, id) and pairs enumerated lexicographically, so |Y| is
// C(m, 2) with reproducible indexing. A warning goes to `warn` (if set) when
// the pair count exceeds `pair_warn_threshold`.
CoverageGraph build_isolation(const NetworkGraph& g, std::span<const NodeId> sensors,
                              std::span<const Target> targets, int lambda,
                              Exec exec = Exec::parallel,
                              std::size_t pair_warn_threshold = kDefaultPairWarnThreshold,
                              std::ostream* warn = nullptr);

CoverageGraph build_coverage(Objective objective, const NetworkGraph& g,
                             std::span<const NodeId> sensors, std::span<const Target> targets,
                             int lambda, Exec exec = Exec::parallel);

}  // namespace monsched

#endif  // MONSCHED_COVERAGE_HPP
