#ifndef MONSCHED_DOMINATION_HPP
#define MONSCHED_DOMINATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "monsched/graph.hpp"
#include "monsched/schedule.hpp"

namespace monsched {

struct DomaticPartition {
  std::vector<std::vector<NodeId>> sets;
};

// k slots, sigma labels per node; labels[v] is node v's label mask.
struct KSigmaConfig {
  int k = 0;
  int sigma = 0;
  std::vector<LabelMask> labels;
};

bool is_dominating(const NetworkGraph& g, std::span<const NodeId> set);

// Throws InputError if sets overlap, are not dominating, or name unknown
// nodes.
void validate_partition(const NetworkGraph& g, const DomaticPartition& dp);

// Repeatedly grows a dominating set from unused nodes, preferring the node
// that dominates the most still-undominated nodes, until the unused nodes
// cannot dominate the graph. Leftover nodes join the last set. With a seed,
// ties are broken uniformly at random; otherwise lowest id wins.
DomaticPartition greedy_domatic_partition(const NetworkGraph& g,
                                          std::optional<std::uint64_t> seed = std::nullopt);

// Exact domatic number by subset search. Refuses (ResourceRefusal) n > 12.
int exact_domatic_number(const NetworkGraph& g);

struct ConfigViolation {
  NodeId node;
  int label;  // 1-based
  friend bool operator==(const ConfigViolation&, const ConfigViolation&) = default;
};

struct ConfigCheck {
  bool valid = false;
  std::vector<ConfigViolation> violations;
};

// Every label must appear in every closed neighbourhood. Throws
// ValidationError when a node does not hold exactly sigma labels in 1..k.
ConfigCheck verify_config(const NetworkGraph& g, const KSigmaConfig& cfg);

// Set i (0-based) gets labels i*sigma+1 .. (i+1)*sigma; k = sigma * |sets|.
// Nodes outside every set get the last set's labels.
KSigmaConfig config_from_domatic(const NetworkGraph& g, const DomaticPartition& dp, int sigma);

enum class SearchOutcome { found, not_found_within_budget, nonexistent };

struct SearchOptions {
  std::int64_t budget = 200000;                       // stochastic iterations
  std::uint64_t exhaustive_limit = 2'000'000;          // max C(k, sigma)^n
  std::uint64_t seed = 0;
  double epsilon = 0.015;
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::not_found_within_budget;
  std::optional<KSigmaConfig> config;
  std::string method;  // "domatic", "exhaustive" or "stochastic"
  std::int64_t iterations = 0;
};

// Looks for a (k, sigma)-configuration. Tries the domatic construction first,
// then exhaustive search on small spaces (which can prove nonexistence), then
// log-linear learning on the closed-neighbourhood coverage game. The
// stochastic mode never claims nonexistence.
SearchResult search_config(const NetworkGraph& g, int k, int sigma,
                           const SearchOptions& options = {});

// Y = V, S = V, lambda = 1 instance used to score configurations.
ProblemInstance domination_instance(const NetworkGraph& g, int k, int sigma);

Labeling config_to_labeling(const KSigmaConfig& cfg);

std::string_view to_string(SearchOutcome outcome);

}  // namespace monsched

#endif  // MONSCHED_DOMINATION_HPP
