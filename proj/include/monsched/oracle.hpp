#ifndef MONSCHED_ORACLE_HPP
#define MONSCHED_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "monsched/exec.hpp"
#include "monsched/graph.hpp"
#include "monsched/schedule.hpp"

namespace monsched {

inline constexpr std::uint64_t kDefaultOracleLimit = 10'000'000;

struct OracleOptions {
  std::uint64_t limit = kDefaultOracleLimit;  // max C(k, sigma)^|X|
  std::size_t keep = 16;                      // optimal labelings kept
  Exec exec = Exec::parallel;
};

struct OracleResult {
  Fraction best_score;
  std::int64_t best_potential = 0;
  std::uint64_t space_size = 0;
  std::uint64_t optimal_count = 0;
  // First optimal labelings in enumeration order: player 0 most
  // significant, subsets by rank.
  std::vector<Labeling> optimal;
};

// Exhaustive search over exactly-sigma labelings. Throws ResourceRefusal when
// the space exceeds options.limit.
OracleResult exact_optimal_schedule(const ProblemInstance& inst,
                                    const OracleOptions& options = {});

struct MaxCut {
  int cut_size = 0;
  std::vector<bool> side;  // side[v] true <=> v in V2
};

// Counts edges with endpoints on different sides.
int cut_size(const NetworkGraph& g, const std::vector<bool>& side);

// Exact maximum cut by 2^(n-1) enumeration; refuses n > 24.
MaxCut max_cut_brute(const NetworkGraph& g);

bool is_triangle_free(const NetworkGraph& g);

// The Max-Cut mapping: S = V, Y = E, lambda = 1, k = 2, sigma = 1.
ProblemInstance reduced_maxcut_instance(const NetworkGraph& g, Exec exec = Exec::parallel);

struct ReductionReport {
  int nodes = 0;
  int edges = 0;
  bool triangle_free = false;
  int max_cut = 0;
  Fraction optimum;      // exact_optimal_schedule on the reduced instance
  Fraction cut_formula;  // 1/2 + maxcut / (2|E|)
  bool optimum_matches = false;
  bool lower_bound_holds = false;  // optimum >= cut_formula
  std::uint64_t labelings_checked = 0;
  std::uint64_t labeling_mismatches = 0;
  // Triangle-free: identity on optimum and every labeling. Otherwise the
  // mapping only gives a lower bound and that is what is required.
  bool ok() const;
};

// Builds the reduced instance, solves it exactly and compares with an
// independent max-cut count. When n <= per_labeling_max_nodes every
// labeling's score is also checked against 1/2 + cut/(2|E|).
ReductionReport reduction_check(const NetworkGraph& g, int per_labeling_max_nodes = 8,
                                Exec exec = Exec::parallel);

}  // namespace monsched

#endif  // MONSCHED_ORACLE_HPP
