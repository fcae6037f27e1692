#include "monsched/domination.hpp"

#include <algorithm>

#include "monsched/combinatorics.hpp"
#include "monsched/coverage.hpp"
#include "monsched/errors.hpp"
#include "monsched/game.hpp"
#include "monsched/oracle.hpp"
#include "monsched/rng.hpp"

namespace monsched {

bool is_dominating(const NetworkGraph& g, std::span<const NodeId> set) {
  std::vector<char> dominated(static_cast<std::size_t>(g.node_count()), 0);
  for (NodeId v : set) {
    if (!g.has_node(v)) throw InputError("unknown node id " + std::to_string(v));
    dominated[v] = 1;
    for (NodeId u : g.neighbors(v)) dominated[u] = 1;
  }
  return std::all_of(dominated.begin(), dominated.end(), [](char c) { return c != 0; });
}

void validate_partition(const NetworkGraph& g, const DomaticPartition& dp) {
  std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
  for (std::size_t i = 0; i < dp.sets.size(); ++i) {
    for (NodeId v : dp.sets[i]) {
      if (!g.has_node(v)) throw InputError("partition names unknown node id " + std::to_string(v));
      if (seen[v]) throw InputError("node '" + g.name(v) + "' appears in two sets");
      seen[v] = 1;
    }
    if (!is_dominating(g, dp.sets[i])) {
      throw InputError("set " + std::to_string(i + 1) + " is not dominating");
    }
  }
}

DomaticPartition greedy_domatic_partition(const NetworkGraph& g,
                                          std::optional<std::uint64_t> seed) {
  const int n = g.node_count();
  DomaticPartition dp;
  if (n == 0) return dp;
  Rng rng(derive_seed(seed.value_or(0), "domatic"));
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  for (;;) {
    std::vector<char> dominated(static_cast<std::size_t>(n), 0);
    std::vector<char> in_set(static_cast<std::size_t>(n), 0);
    std::vector<NodeId> set;
    int undominated = n;
    bool complete = true;
    while (undominated > 0) {
      int best_gain = 0;
      std::vector<NodeId> ties;
      for (NodeId v = 0; v < n; ++v) {
        if (used[v] || in_set[v]) continue;
        int gain = !dominated[v];
        for (NodeId u : g.neighbors(v)) gain += !dominated[u];
        if (gain > best_gain) {
          best_gain = gain;
          ties.assign(1, v);
        } else if (gain == best_gain && gain > 0) {
          ties.push_back(v);
        }
      }
      if (best_gain == 0) {
        complete = false;
        break;
      }
      const NodeId v = seed ? ties[uniform_below(rng, ties.size())] : ties.front();
      in_set[v] = 1;
      set.push_back(v);
      undominated -= !dominated[v];
      dominated[v] = 1;
      for (NodeId u : g.neighbors(v)) {
        undominated -= !dominated[u];
        dominated[u] = 1;
      }
    }
    if (!complete) break;
    for (NodeId v : set) used[v] = 1;
    std::sort(set.begin(), set.end());
    dp.sets.push_back(std::move(set));
  }

  auto& last = dp.sets.back();
  for (NodeId v = 0; v < n; ++v) {
    if (!used[v]) last.push_back(v);
  }
  std::sort(last.begin(), last.end());
  return dp;
}

int exact_domatic_number(const NetworkGraph& g) {
  const int n = g.node_count();
  if (n > 12) throw ResourceRefusal("exact domatic number refused for n > 12");
  if (n == 0) return 0;
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    closed[v] = 1U << v;
    for (NodeId u : g.neighbors(v)) closed[v] |= 1U << u;
  }
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  for (std::uint32_t m = 1; m <= full; ++m) {
    reach[m] = reach[m & (m - 1)] | closed[__builtin_ctz(m)];
  }
  // packing[avail]: most disjoint dominating sets inside `avail`.
  std::vector<int> packing(std::size_t{1} << n, -1);
  auto solve = [&](auto&& self, std::uint32_t avail) -> int {
    if (packing[avail] >= 0) return packing[avail];
    int best = 0;
    if (reach[avail] == full) {
      for (std::uint32_t d = avail; d != 0; d = (d - 1) & avail) {
        if (reach[d] == full) best = std::max(best, 1 + self(self, avail & ~d));
      }
    }
    return packing[avail] = best;
  };
  return solve(solve, full);
}

ConfigCheck verify_config(const NetworkGraph& g, const KSigmaConfig& cfg) {
  if (cfg.k < 1 || cfg.k > kMaxSlots || cfg.sigma < 1 || cfg.sigma > cfg.k) {
    throw ValidationError("configuration needs 1 <= sigma <= k <= 64");
  }
  if (static_cast<int>(cfg.labels.size()) != g.node_count()) {
    throw ValidationError("configuration does not label every node");
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (label_count(cfg.labels[v]) != cfg.sigma || (cfg.labels[v] & ~full_mask(cfg.k)) != 0) {
      throw ValidationError("node '" + g.name(v) + "' does not hold exactly " +
                            std::to_string(cfg.sigma) + " labels from 1.." + std::to_string(cfg.k));
    }
  }
  ConfigCheck out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    LabelMask avail = cfg.labels[v];
    for (NodeId u : g.neighbors(v)) avail |= cfg.labels[u];
    for (LabelMask missing = full_mask(cfg.k) & ~avail; missing != 0; missing &= missing - 1) {
      out.violations.push_back({v, __builtin_ctzll(missing) + 1});
    }
  }
  out.valid = out.violations.empty();
  return out;
}

KSigmaConfig config_from_domatic(const NetworkGraph& g, const DomaticPartition& dp, int sigma) {
  validate_partition(g, dp);
  if (dp.sets.empty()) throw InputError("empty domatic partition");
  if (sigma < 1) throw InputError("sigma must be positive");
  const auto sets = static_cast<int>(dp.sets.size());
  if (static_cast<long>(sigma) * sets > kMaxSlots) {
    throw InputError("sigma * sets exceeds " + std::to_string(kMaxSlots) + " slots");
  }
  KSigmaConfig cfg;
  cfg.sigma = sigma;
  cfg.k = sigma * sets;
  auto block = [&](int i) { return full_mask(sigma) << (i * sigma); };
  cfg.labels.assign(static_cast<std::size_t>(g.node_count()), block(sets - 1));
  for (int i = 0; i < sets; ++i) {
    for (NodeId v : dp.sets[i]) cfg.labels[v] = block(i);
  }
  return cfg;
}

ProblemInstance domination_instance(const NetworkGraph& g, int k, int sigma) {
  std::vector<NodeId> all(static_cast<std::size_t>(g.node_count()));
  for (NodeId v = 0; v < g.node_count(); ++v) all[v] = v;
  const auto targets = g.all_node_targets();
  return ProblemInstance(build_detection(g, all, targets, 1), k, sigma);
}

Labeling config_to_labeling(const KSigmaConfig& cfg) {
  Labeling l(static_cast<int>(cfg.labels.size()), cfg.k);
  for (std::size_t v = 0; v < cfg.labels.size(); ++v) l.set_mask(static_cast<int>(v), cfg.labels[v]);
  return l;
}

std::string_view to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::not_found_within_budget: return "not found within budget";
    case SearchOutcome::nonexistent: return "nonexistent";
  }
  return "?";
}

namespace {

KSigmaConfig config_from_labeling(const Labeling& l, int sigma) {
  KSigmaConfig cfg;
  cfg.k = l.k();
  cfg.sigma = sigma;
  cfg.labels.assign(l.masks().begin(), l.masks().end());
  return cfg;
}

}  // namespace

SearchResult search_config(const NetworkGraph& g, int k, int sigma, const SearchOptions& options) {
  if (sigma < 1 || sigma > k || k > kMaxSlots) {
    throw InputError("search needs 1 <= sigma <= k <= 64");
  }
  if (g.node_count() == 0) throw InputError("graph has no nodes");
  SearchResult out;

  if (k % sigma == 0) {
    DomaticPartition dp = greedy_domatic_partition(g);
    const auto want = static_cast<std::size_t>(k / sigma);
    if (want <= dp.sets.size()) {
      auto& keep = dp.sets[want - 1];
      for (std::size_t i = want; i < dp.sets.size(); ++i) {
        keep.insert(keep.end(), dp.sets[i].begin(), dp.sets[i].end());
      }
      std::sort(keep.begin(), keep.end());
      dp.sets.resize(want);
      KSigmaConfig cfg = config_from_domatic(g, dp, sigma);
      if (verify_config(g, cfg).valid) {
        out.outcome = SearchOutcome::found;
        out.config = std::move(cfg);
        out.method = "domatic";
        return out;
      }
    }
  }

  const ProblemInstance inst = domination_instance(g, k, sigma);
  const std::int64_t target = static_cast<std::int64_t>(g.node_count()) * k;

  OracleOptions oracle;
  oracle.limit = options.exhaustive_limit;
  oracle.keep = 1;
  bool small = true;
  OracleResult exact;
  try {
    exact = exact_optimal_schedule(inst, oracle);
  } catch (const ResourceRefusal&) {
    small = false;
  }
  if (small) {
    out.method = "exhaustive";
    out.iterations = static_cast<std::int64_t>(exact.space_size);
    if (exact.best_potential == target) {
      out.outcome = SearchOutcome::found;
      out.config = config_from_labeling(exact.optimal.front(), sigma);
    } else {
      out.outcome = SearchOutcome::nonexistent;
    }
    return out;
  }

  BlllParams params;
  params.epsilon = options.epsilon;
  params.iterations = options.budget;
  params.seed = derive_seed(options.seed, "search-config");
  params.stop_at_potential = target;
  params.trace_stride = std::max<std::int64_t>(1, options.budget);
  const BlllResult run = blll_schedule(inst, params);
  out.method = "stochastic";
  out.iterations = run.iterations_run;
  if (run.best_potential == target) {
    out.outcome = SearchOutcome::found;
    out.config = config_from_labeling(run.best_labeling, sigma);
  } else {
    out.outcome = SearchOutcome::not_found_within_budget;
  }
  return out;
}

}  // namespace monsched
