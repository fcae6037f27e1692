#ifndef MONSCHED_INSTANCE_IO_HPP
#define MONSCHED_INSTANCE_IO_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monsched/coverage.hpp"
#include "monsched/exec.hpp"
#include "monsched/graph.hpp"
#include "monsched/schedule.hpp"

namespace monsched {

// Parsed instance document:
//
//   # comment
//   [nodes]
//   a
//   b
//   [edges]
//   a b
//   [sensors]
//   all            (or one node name per line)
//   [targets]
//   all-edges      (or all-nodes, or "name" / "name name" per line)
//   [params]
//   lambda = 1
//   k = 2
//   sigma = 1
//   objective = detection
//
// Graph-only commands ignore [sensors], [targets] and [params].
struct InstanceFile {
  enum class TargetMode { all_nodes, all_edges, listed };

  NetworkGraph graph;
  std::optional<std::vector<NodeId>> sensors;  // nullopt: every node
  TargetMode target_mode = TargetMode::all_nodes;
  std::vector<Target> targets;  // when target_mode == listed
  std::optional<int> lambda;
  std::optional<int> k;
  std::optional<int> sigma;
  Objective objective = Objective::detection;

  std::vector<NodeId> sensor_nodes() const;
  std::vector<Target> target_list() const;

  // Throws InputError if lambda, k or sigma is missing or out of range.
  ProblemInstance problem(Exec exec = Exec::parallel) const;
  // Same instance with an explicit device set.
  ProblemInstance problem_with_sensors(std::span<const NodeId> sensors,
                                       Exec exec = Exec::parallel) const;
};

// Errors carry "source:line: message".
InstanceFile parse_instance(std::string_view text, std::string_view source = "<input>");
InstanceFile load_instance(const std::string& path);
std::string format_instance(const InstanceFile& instance);

// Plain "u v" edge list (blank lines and '#' comments skipped) into an
// instance with every node a sensor and every node a target.
InstanceFile instance_from_edge_list(std::string_view text, std::string_view source = "<input>");

// "name: 1,3" per X vertex; `include_empty` also writes "name:" lines.
std::string format_labeling(const CoverageGraph& coverage, const Labeling& labeling,
                            bool include_empty = true);
// Reads the table up to a "[report]" line or end of text; unknown names and
// labels outside 1..k are InputErrors. Unlisted X vertices stay empty.
Labeling parse_labeling(std::string_view text, const CoverageGraph& coverage, int k);

// "[report]" block: objective, per-slot coverage, potential, exact score.
std::string format_report(const ProblemInstance& inst, const ScheduleReport& report);

// Shortest round-trip decimal, locale independent.
std::string format_number(double value);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace monsched

#endif  // MONSCHED_INSTANCE_IO_HPP
