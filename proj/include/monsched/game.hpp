#ifndef MONSCHED_GAME_HPP
#define MONSCHED_GAME_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monsched/rng.hpp"
#include "monsched/schedule.hpp"

namespace monsched {

// Joint action profile of the labeling game plus per-(y, slot) counts of
// active covering devices, so utilities and potential updates cost
// O(|N(x)| * sigma) instead of a full recount.
//
// Players sit on coverage X vertices ("sites"). In schedule mode player p is
// pinned to site p; in placement mode players move between distinct sites.
class GameState {
 public:
  // Schedule mode: one player per X vertex, actions[p] is its label mask.
  GameState(const CoverageGraph& coverage, int k, std::vector<LabelMask> actions);
  // Placement mode: sites must be distinct X indices.
  GameState(const CoverageGraph& coverage, int k, std::vector<int> sites,
            std::vector<LabelMask> actions);

  const CoverageGraph& coverage() const { return *coverage_; }
  int k() const { return k_; }
  int player_count() const { return static_cast<int>(actions_.size()); }
  bool placement_mode() const { return placement_; }

  int site(int player) const { return sites_.at(player); }
  LabelMask action(int player) const { return actions_.at(player); }
  bool site_occupied(int site) const { return occupant_.at(site) >= 0; }
  const std::vector<int>& sites() const { return sites_; }

  // Cached potential: sum_j |union of N(x) over active x in slot j|.
  std::int64_t potential() const { return potential_; }
  // Same quantity from scratch, ignoring the caches.
  std::int64_t recount_potential() const;
  // True when cached counters and potential equal a full recount.
  bool audit() const;

  // Labels the player alone makes available to its neighbours.
  std::int64_t utility(int player) const;
  // Utility the player would get at (site, action) with everyone else fixed.
  std::int64_t utility_if(int player, int site, LabelMask action) const;

  void set_action(int player, LabelMask action);
  // Placement mode; `site` must be free or the player's own.
  void move(int player, int site, LabelMask action);

  // Per-site labeling over all coverage X vertices (empty at unused sites).
  Labeling site_labeling() const;
  // Per-player labeling (schedule mode: identical to site_labeling()).
  Labeling player_labeling() const;

 private:
  void apply(int site, LabelMask action, int delta);
  bool provides(int player, int y, int slot) const;

  const CoverageGraph* coverage_;
  int k_;
  bool placement_;
  std::vector<int> sites_;
  std::vector<LabelMask> actions_;
  std::vector<int> occupant_;
  std::vector<std::int32_t> counts_;  // [y * k + j]
  std::int64_t potential_ = 0;
};

// Phi of a state, also checked against sum_y |F(y)|.
std::int64_t potential(const GameState& state);
std::int64_t utility(const GameState& state, int player);

struct PotentialDeltas {
  std::int64_t delta_utility = 0;
  std::int64_t delta_potential = 0;
};

// Utility change from the player's own utility function, potential change
// from two full recounts. The two agree on every unilateral deviation.
PotentialDeltas check_potential_identity(const GameState& state, int player,
                                         LabelMask alternative);
PotentialDeltas check_potential_identity(const GameState& state, int player, int site,
                                         LabelMask alternative);

enum class Acceptance {
  // P(accept) = b^U' / (b^U' + b^U) with b = 1/epsilon: favours higher utility.
  log_linear,
  // The same formula with b = epsilon, which favours lower utility.
  printed,
};

struct BlllParams {
  double epsilon = 0.015;
  std::int64_t iterations = 20000;
  std::uint64_t seed = 0;
  std::int64_t trace_stride = 100;
  Acceptance acceptance = Acceptance::log_linear;
  // Recount and compare the cached potential every N accepted moves.
  std::int64_t audit_every = 1000;
  // Stop early once the potential reaches this value.
  std::optional<std::int64_t> stop_at_potential;

  void validate() const;
};

struct TracePoint {
  std::int64_t iteration = 0;
  std::int64_t potential = 0;
  std::int64_t best_potential = 0;
};

struct BlllResult {
  Labeling final_labeling;
  Labeling best_labeling;
  std::int64_t final_potential = 0;
  std::int64_t best_potential = 0;
  std::int64_t iterations_run = 0;
  std::int64_t accepted = 0;
  std::vector<TracePoint> trace;
};

// Probability of switching to the trial action.
double acceptance_probability(std::int64_t current_utility, std::int64_t trial_utility,
                              double epsilon, Acceptance acceptance);

// Binary log-linear learning over exactly-sigma labelings.
BlllResult blll_schedule(const ProblemInstance& inst, const BlllParams& params);

struct PlacementResult {
  std::vector<int> final_sites;  // coverage X indices, one per player
  Labeling final_labeling;       // per player
  std::vector<int> best_sites;
  Labeling best_labeling;
  std::int64_t final_potential = 0;
  std::int64_t best_potential = 0;
  std::int64_t accepted = 0;
  std::vector<TracePoint> trace;
};

// Joint placement and scheduling: each trial moves one player to a free
// candidate site (or keeps its own) with a fresh sigma-subset.
// `candidate_sites` are coverage X indices.
PlacementResult blll_place_and_schedule(const ProblemInstance& inst,
                                        std::span<const int> candidate_sites, int device_count,
                                        const BlllParams& params);

// Greedy maximum coverage: device_count sites maximising |union N(site)|,
// lowest index on ties.
std::vector<int> greedy_max_coverage_placement(const CoverageGraph& coverage,
                                               std::span<const int> candidate_sites,
                                               int device_count);

// Baseline: greedy maximum-coverage placement, then BLLL scheduling.
PlacementResult two_stage_place_and_schedule(const ProblemInstance& inst,
                                             std::span<const int> candidate_sites,
                                             int device_count, const BlllParams& params);

}  // namespace monsched

#endif  // MONSCHED_GAME_HPP
