#include "monsched/game.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "monsched/combinatorics.hpp"
#include "monsched/errors.hpp"

namespace monsched {

namespace {

constexpr std::uint64_t kFullProposalLimit = 1'000'000;

std::vector<int> identity_sites(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

}  // namespace

GameState::GameState(const CoverageGraph& coverage, int k, std::vector<LabelMask> actions)
    : GameState(coverage, k, identity_sites(coverage.x_count()), std::move(actions)) {
  placement_ = false;
}

GameState::GameState(const CoverageGraph& coverage, int k, std::vector<int> sites,
                     std::vector<LabelMask> actions)
    : coverage_(&coverage),
      k_(k),
      placement_(true),
      sites_(std::move(sites)),
      actions_(std::move(actions)),
      occupant_(static_cast<std::size_t>(coverage.x_count()), -1),
      counts_(static_cast<std::size_t>(coverage.y_count()) * k, 0) {
  if (k < 1 || k > kMaxSlots) throw InputError("k out of range");
  if (sites_.size() != actions_.size()) throw InputError("one action per player required");
  for (std::size_t p = 0; p < sites_.size(); ++p) {
    const int s = sites_[p];
    if (s < 0 || s >= coverage.x_count()) throw InputError("player site out of range");
    if (occupant_[s] >= 0) throw InputError("two players on one site");
    if ((actions_[p] & ~full_mask(k)) != 0) throw InputError("action uses a label outside 1..k");
    occupant_[s] = static_cast<int>(p);
    apply(s, actions_[p], +1);
  }
}

void GameState::apply(int site, LabelMask action, int delta) {
  for (int y : coverage_->x_neighbors(site)) {
    std::int32_t* row = &counts_[static_cast<std::size_t>(y) * k_];
    for (LabelMask m = action; m != 0; m &= m - 1) {
      const int j = __builtin_ctzll(m);
      if (delta > 0) {
        potential_ += row[j] == 0;
        ++row[j];
      } else {
        --row[j];
        potential_ -= row[j] == 0;
      }
    }
  }
}

bool GameState::provides(int player, int y, int slot) const {
  if (((actions_[player] >> slot) & 1U) == 0) return false;
  return coverage_->covers(sites_[player], y);
}

std::int64_t GameState::utility_if(int player, int site, LabelMask action) const {
  const bool same_site = site == sites_.at(player);
  const LabelMask own = actions_[player];
  std::int64_t u = 0;
  for (int y : coverage_->x_neighbors(site)) {
    const std::int32_t* row = &counts_[static_cast<std::size_t>(y) * k_];
    for (LabelMask m = action; m != 0; m &= m - 1) {
      const int j = __builtin_ctzll(m);
      const int mine = same_site ? static_cast<int>((own >> j) & 1U) : provides(player, y, j);
      u += row[j] - mine == 0;
    }
  }
  return u;
}

std::int64_t GameState::utility(int player) const {
  return utility_if(player, sites_.at(player), actions_.at(player));
}

void GameState::set_action(int player, LabelMask action) {
  if ((action & ~full_mask(k_)) != 0) throw InputError("action uses a label outside 1..k");
  apply(sites_.at(player), actions_[player], -1);
  actions_[player] = action;
  apply(sites_[player], action, +1);
}

void GameState::move(int player, int site, LabelMask action) {
  if ((action & ~full_mask(k_)) != 0) throw InputError("action uses a label outside 1..k");
  if (site < 0 || site >= coverage_->x_count()) throw InputError("site out of range");
  if (occupant_[site] >= 0 && occupant_[site] != player) throw InputError("site is occupied");
  if (!placement_ && site != sites_.at(player)) throw InputError("schedule-mode players cannot move");
  apply(sites_[player], actions_[player], -1);
  occupant_[sites_[player]] = -1;
  sites_[player] = site;
  actions_[player] = action;
  occupant_[site] = player;
  apply(site, action, +1);
}

std::int64_t GameState::recount_potential() const {
  std::int64_t total = 0;
  std::vector<char> hit(static_cast<std::size_t>(coverage_->y_count()));
  for (int j = 0; j < k_; ++j) {
    std::fill(hit.begin(), hit.end(), 0);
    for (int p = 0; p < player_count(); ++p) {
      if (((actions_[p] >> j) & 1U) == 0) continue;
      for (int y : coverage_->x_neighbors(sites_[p])) {
        if (!hit[y]) {
          hit[y] = 1;
          ++total;
        }
      }
    }
  }
  return total;
}

bool GameState::audit() const {
  std::vector<std::int32_t> fresh(counts_.size(), 0);
  for (int p = 0; p < player_count(); ++p) {
    for (int y : coverage_->x_neighbors(sites_[p])) {
      for (LabelMask m = actions_[p]; m != 0; m &= m - 1) {
        ++fresh[static_cast<std::size_t>(y) * k_ + __builtin_ctzll(m)];
      }
    }
  }
  return fresh == counts_ && recount_potential() == potential_;
}

Labeling GameState::site_labeling() const {
  Labeling l(coverage_->x_count(), k_);
  for (int p = 0; p < player_count(); ++p) l.set_mask(sites_[p], actions_[p]);
  return l;
}

Labeling GameState::player_labeling() const {
  Labeling l(player_count(), k_);
  for (int p = 0; p < player_count(); ++p) l.set_mask(p, actions_[p]);
  return l;
}

std::int64_t potential(const GameState& state) {
#ifndef NDEBUG
  if (labeling_potential(state.coverage(), state.site_labeling()) != state.potential()) {
    throw std::logic_error("cached potential differs from sum of |F(y)|");
  }
#endif
  return state.potential();
}

std::int64_t utility(const GameState& state, int player) { return state.utility(player); }

PotentialDeltas check_potential_identity(const GameState& state, int player, int site,
                                         LabelMask alternative) {
  GameState after = state;
  after.move(player, site, alternative);
  PotentialDeltas d;
  d.delta_utility = state.utility_if(player, site, alternative) - state.utility(player);
  d.delta_potential = after.recount_potential() - state.recount_potential();
  return d;
}

PotentialDeltas check_potential_identity(const GameState& state, int player,
                                         LabelMask alternative) {
  return check_potential_identity(state, player, state.site(player), alternative);
}

void BlllParams::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  if (iterations < 0) throw InputError("iterations must be non-negative");
  if (trace_stride < 1) throw InputError("trace stride must be positive");
}

double acceptance_probability(std::int64_t current_utility, std::int64_t trial_utility,
                              double epsilon, Acceptance acceptance) {
  const double log_base =
      acceptance == Acceptance::log_linear ? -std::log(epsilon) : std::log(epsilon);
  // b^U' / (b^U' + b^U) = 1 / (1 + b^(U - U'))
  const double exponent = static_cast<double>(current_utility - trial_utility) * log_base;
  if (exponent > 700.0) return 0.0;
  if (exponent < -700.0) return 1.0;
  return 1.0 / (1.0 + std::exp(exponent));
}

namespace {

// Uniform over the C(k, sigma) - 1 subsets other than `current`, or a single
// label swap when that set is too large to rank.
LabelMask propose_alternative(Rng& rng, LabelMask current, int k, int sigma,
                              std::uint64_t n_actions) {
  if (n_actions <= kFullProposalLimit) {
    std::uint64_t r = uniform_below(rng, n_actions - 1);
    if (r >= subset_rank(current)) ++r;
    return subset_unrank(r, k, sigma);
  }
  const LabelMask off = full_mask(k) & ~current;
  auto nth_bit = [](LabelMask m, std::uint64_t n) {
    for (; n > 0; --n) m &= m - 1;
    return LabelMask{1} << __builtin_ctzll(m);
  };
  const LabelMask drop = nth_bit(current, uniform_below(rng, label_count(current)));
  const LabelMask add = nth_bit(off, uniform_below(rng, label_count(off)));
  return (current & ~drop) | add;
}

void maybe_audit(const GameState& st, std::int64_t accepted, std::int64_t every) {
  if (every > 0 && accepted % every == 0 && !st.audit()) {
    throw std::logic_error("incremental potential drifted from recount");
  }
}

}  // namespace

BlllResult blll_schedule(const ProblemInstance& inst, const BlllParams& params) {
  params.validate();
  const CoverageGraph& cov = inst.coverage;
  const int nx = cov.x_count();
  const int k = inst.k;
  const int sigma = inst.sigma;
  Rng rng(derive_seed(params.seed, "blll"));

  std::vector<LabelMask> init(static_cast<std::size_t>(nx));
  for (auto& a : init) a = random_subset_mask(rng, k, sigma);
  GameState st(cov, k, std::move(init));

  const std::uint64_t n_actions = binomial(k, sigma);
  BlllResult r;
  r.best_potential = st.potential();
  r.best_labeling = st.site_labeling();
  r.trace.push_back({0, st.potential(), r.best_potential});

  std::int64_t it = 0;
  while (it < params.iterations) {
    if (params.stop_at_potential && r.best_potential >= *params.stop_at_potential) break;
    ++it;
    const int x = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(nx)));
    if (n_actions > 1) {
      const LabelMask trial = propose_alternative(rng, st.action(x), k, sigma, n_actions);
      const double p = acceptance_probability(st.utility(x), st.utility_if(x, x, trial),
                                              params.epsilon, params.acceptance);
      if (uniform_unit(rng) < p) {
        st.set_action(x, trial);
        ++r.accepted;
        maybe_audit(st, r.accepted, params.audit_every);
        if (st.potential() > r.best_potential) {
          r.best_potential = st.potential();
          r.best_labeling = st.site_labeling();
        }
      }
    }
    if (it % params.trace_stride == 0 || it == params.iterations) {
      r.trace.push_back({it, st.potential(), r.best_potential});
    }
  }
  if (r.trace.back().iteration != it) r.trace.push_back({it, st.potential(), r.best_potential});
  r.iterations_run = it;
  r.final_labeling = st.site_labeling();
  r.final_potential = potential(st);
  return r;
}

namespace {

void check_sites(const CoverageGraph& cov, std::span<const int> sites, int device_count) {
  if (device_count < 1) throw InputError("device count must be positive");
  std::set<int> seen;
  for (int s : sites) {
    if (s < 0 || s >= cov.x_count()) throw InputError("candidate site out of range");
    if (!seen.insert(s).second) throw InputError("duplicate candidate site");
  }
  if (static_cast<std::size_t>(device_count) > sites.size()) {
    throw InputError("device count " + std::to_string(device_count) + " exceeds the " +
                     std::to_string(sites.size()) + " candidate sites");
  }
}

}  // namespace

PlacementResult blll_place_and_schedule(const ProblemInstance& inst,
                                        std::span<const int> candidate_sites, int device_count,
                                        const BlllParams& params) {
  params.validate();
  const CoverageGraph& cov = inst.coverage;
  check_sites(cov, candidate_sites, device_count);
  const int k = inst.k;
  const int sigma = inst.sigma;
  Rng rng(derive_seed(params.seed, "blll-joint"));

  // Partial Fisher-Yates: the first device_count entries become the initial
  // placement, the rest are the free sites.
  std::vector<int> pool(candidate_sites.begin(), candidate_sites.end());
  for (int i = 0; i < device_count; ++i) {
    const auto j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> sites(pool.begin(), pool.begin() + device_count);
  std::vector<int> free_sites(pool.begin() + device_count, pool.end());
  std::vector<int> free_pos(static_cast<std::size_t>(cov.x_count()), -1);
  for (std::size_t i = 0; i < free_sites.size(); ++i) free_pos[free_sites[i]] = static_cast<int>(i);

  std::vector<LabelMask> actions(static_cast<std::size_t>(device_count));
  for (auto& a : actions) a = random_subset_mask(rng, k, sigma);
  GameState st(cov, k, sites, std::move(actions));

  PlacementResult r;
  r.best_potential = st.potential();
  r.best_sites = st.sites();
  r.best_labeling = st.player_labeling();
  r.trace.push_back({0, st.potential(), r.best_potential});

  for (std::int64_t it = 1; it <= params.iterations; ++it) {
    const int p = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(device_count)));
    const auto pick = uniform_below(rng, free_sites.size() + 1);
    const int own = st.site(p);
    const int s = pick == free_sites.size() ? own : free_sites[pick];
    const LabelMask trial = random_subset_mask(rng, k, sigma);
    const double prob = acceptance_probability(st.utility(p), st.utility_if(p, s, trial),
                                               params.epsilon, params.acceptance);
    if (uniform_unit(rng) < prob) {
      st.move(p, s, trial);
      if (s != own) {
        const int slot = free_pos[s];
        free_sites[slot] = own;
        free_pos[own] = slot;
        free_pos[s] = -1;
      }
      ++r.accepted;
      maybe_audit(st, r.accepted, params.audit_every);
      if (st.potential() > r.best_potential) {
        r.best_potential = st.potential();
        r.best_sites = st.sites();
        r.best_labeling = st.player_labeling();
      }
    }
    if (it % params.trace_stride == 0 || it == params.iterations) {
      r.trace.push_back({it, st.potential(), r.best_potential});
    }
  }
  r.final_sites = st.sites();
  r.final_labeling = st.player_labeling();
  r.final_potential = potential(st);
  return r;
}

std::vector<int> greedy_max_coverage_placement(const CoverageGraph& coverage,
                                               std::span<const int> candidate_sites,
                                               int device_count) {
  check_sites(coverage, candidate_sites, device_count);
  std::vector<int> remaining(candidate_sites.begin(), candidate_sites.end());
  std::sort(remaining.begin(), remaining.end());
  std::vector<char> covered(static_cast<std::size_t>(coverage.y_count()), 0);
  std::vector<int> chosen;
  for (int d = 0; d < device_count; ++d) {
    std::size_t best_i = 0;
    std::int64_t best_gain = -1;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      std::int64_t gain = 0;
      for (int y : coverage.x_neighbors(remaining[i])) gain += !covered[y];
      if (gain > best_gain) {
        best_gain = gain;
        best_i = i;
      }
    }
    const int s = remaining[best_i];
    for (int y : coverage.x_neighbors(s)) covered[y] = 1;
    chosen.push_back(s);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_i));
  }
  return chosen;
}

PlacementResult two_stage_place_and_schedule(const ProblemInstance& inst,
                                             std::span<const int> candidate_sites,
                                             int device_count, const BlllParams& params) {
  const auto sites = greedy_max_coverage_placement(inst.coverage, candidate_sites, device_count);
  const ProblemInstance sub(inst.coverage.restrict_x(sites), inst.k, inst.sigma);
  const BlllResult b = blll_schedule(sub, params);
  PlacementResult r;
  r.final_sites = sites;
  r.best_sites = sites;
  r.final_labeling = b.final_labeling;
  r.best_labeling = b.best_labeling;
  r.final_potential = b.final_potential;
  r.best_potential = b.best_potential;
  r.accepted = b.accepted;
  r.trace = b.trace;
  return r;
}

}  // namespace monsched
