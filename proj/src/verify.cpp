#include "monsched/verify.hpp"

#include <algorithm>
#include <numeric>

#include "monsched/combinatorics.hpp"
#include "monsched/coverage.hpp"
#include "monsched/game.hpp"
#include "monsched/oracle.hpp"

namespace monsched {

namespace {

int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

void note(SuiteResult& r, std::string detail) {
  ++r.failures;
  if (r.failure_details.size() < 5) r.failure_details.push_back(std::move(detail));
}

}  // namespace

NetworkGraph random_graph(Rng& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (uniform_unit(rng) < p) edges.emplace_back(i, j);
    }
  }
  return NetworkGraph::from_edges(n, edges);
}

NetworkGraph random_triangle_free_graph(Rng& rng, int n, double p) {
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(n, 0));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (uniform_unit(rng) >= p) continue;
      bool closes = false;
      for (int w = 0; w < n && !closes; ++w) closes = adj[i][w] && adj[j][w];
      if (closes) continue;
      adj[i][j] = adj[j][i] = 1;
      edges.emplace_back(i, j);
    }
  }
  return NetworkGraph::from_edges(n, edges);
}

ProblemInstance random_instance(Rng& rng, const RandomInstanceSpec& spec, Exec exec) {
  const int n = uniform_int(rng, spec.min_nodes, spec.max_nodes);
  const NetworkGraph g = random_graph(rng, n, spec.edge_probability);

  std::vector<NodeId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const int n_sensors = uniform_int(rng, 1, std::min(spec.max_sensors, n));
  for (int i = 0; i < n_sensors; ++i) {
    std::swap(order[i], order[i + uniform_below(rng, static_cast<std::uint64_t>(n - i))]);
  }
  std::vector<NodeId> sensors(order.begin(), order.begin() + n_sensors);

  auto targets = g.all_node_targets();
  if (g.edge_count() >= 2 && uniform_below(rng, 2) == 1) targets = g.all_edge_targets();
  const int lambda = uniform_int(rng, 1, spec.max_lambda);

  int k = 1;
  int sigma = 1;
  do {
    k = uniform_int(rng, 1, spec.max_k);
    sigma = uniform_int(rng, 1, k);
  } while (binomial(k, sigma) > spec.max_actions);

  const bool isolation =
      spec.allow_isolation && targets.size() >= 2 && targets.size() <= 12 && uniform_below(rng, 3) == 0;
  auto cov = isolation ? build_isolation(g, sensors, targets, lambda, exec)
                       : build_detection(g, sensors, targets, lambda, exec);
  return ProblemInstance(std::move(cov), k, sigma);
}

Labeling random_full_labeling(Rng& rng, int x_count, int k, int sigma) {
  Labeling l(x_count, k);
  for (int x = 0; x < x_count; ++x) l.set_mask(x, random_subset_mask(rng, k, sigma));
  return l;
}

Labeling random_partial_labeling(Rng& rng, int x_count, int k, int sigma) {
  Labeling l(x_count, k);
  for (int x = 0; x < x_count; ++x) {
    const int size = uniform_int(rng, 0, sigma);
    l.set_mask(x, size == 0 ? 0 : random_subset_mask(rng, k, size));
  }
  return l;
}

SuiteResult potential_game_suite(std::uint64_t seed, int instances, int deviations_per_instance) {
  SuiteResult r{"potential-game", 0, 0, 0, {}};
  Rng rng(derive_seed(seed, "verify-potential"));
  RandomInstanceSpec spec;
  spec.max_sensors = 8;
  spec.max_k = 8;
  spec.max_actions = 1000;
  for (int i = 0; i < instances; ++i) {
    const ProblemInstance inst = random_instance(rng, spec);
    const CoverageGraph& cov = inst.coverage;
    const bool placement = i % 2 == 1;
    ++r.instances;

    std::vector<int> sites;
    if (placement) {
      std::vector<int> all(static_cast<std::size_t>(cov.x_count()));
      std::iota(all.begin(), all.end(), 0);
      const int devices = uniform_int(rng, 1, cov.x_count());
      for (int d = 0; d < devices; ++d) {
        std::swap(all[d], all[d + uniform_below(rng, all.size() - d)]);
      }
      sites.assign(all.begin(), all.begin() + devices);
    }
    const int players = placement ? static_cast<int>(sites.size()) : cov.x_count();
    std::vector<LabelMask> actions(static_cast<std::size_t>(players));
    for (auto& a : actions) a = random_subset_mask(rng, inst.k, inst.sigma);
    GameState st = placement ? GameState(cov, inst.k, sites, actions) : GameState(cov, inst.k, actions);

    for (int d = 0; d < deviations_per_instance; ++d) {
      const int p = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(players)));
      const LabelMask alt = random_subset_mask(rng, inst.k, inst.sigma);
      int site = st.site(p);
      if (placement) {
        std::vector<int> options{site};
        for (int s = 0; s < cov.x_count(); ++s) {
          if (!st.site_occupied(s)) options.push_back(s);
        }
        site = options[uniform_below(rng, options.size())];
      }
      const PotentialDeltas deltas = check_potential_identity(st, p, site, alt);
      ++r.checks;
      if (deltas.delta_utility != deltas.delta_potential) {
        note(r, "instance " + std::to_string(i) + ": dU=" + std::to_string(deltas.delta_utility) +
                    " dphi=" + std::to_string(deltas.delta_potential));
      }
      // Walk the state so later deviations start from varied profiles.
      if (placement) st.move(p, site, alt); else st.set_action(p, alt);
      if (!st.audit()) note(r, "instance " + std::to_string(i) + ": cached potential drifted");
    }
  }
  return r;
}

SuiteResult proposition1_suite(std::uint64_t seed, int instances, int labelings_per_instance) {
  SuiteResult r{"proposition1", 0, 0, 0, {}};
  Rng rng(derive_seed(seed, "verify-proposition1"));
  RandomInstanceSpec spec;
  spec.max_sensors = 8;
  spec.max_k = 10;
  spec.max_actions = 1u << 20;
  for (int i = 0; i < instances; ++i) {
    const ProblemInstance inst = random_instance(rng, spec);
    ++r.instances;
    const auto m = static_cast<std::uint64_t>(inst.coverage.y_count());
    for (int t = 0; t < labelings_per_instance; ++t) {
      const Labeling l = random_partial_labeling(rng, inst.coverage.x_count(), inst.k, inst.sigma);
      const std::int64_t by_label = labeling_potential(inst.coverage, l);
      const auto slots = slot_coverage(inst.coverage, labeling_to_schedule(l));
      std::int64_t by_slot = 0;
      Fraction slot_form;
      for (auto c : slots) {
        by_slot += c;
        slot_form = slot_form + Fraction(static_cast<std::uint64_t>(c), m);
      }
      slot_form = slot_form * Fraction(1, static_cast<std::uint64_t>(inst.k));
      const Fraction label_form(static_cast<std::uint64_t>(by_label), inst.score_denominator());
      ++r.checks;
      if (by_label != by_slot || label_form != slot_form || score(inst, l).score != label_form) {
        note(r, "instance " + std::to_string(i) + ": sum|F|=" + std::to_string(by_label) +
                    " sum|N(S)|=" + std::to_string(by_slot));
      }
    }
  }
  return r;
}

SuiteResult reduction_suite(std::uint64_t seed, int graphs, int max_nodes, int per_labeling_max_nodes) {
  SuiteResult r{"reduction", 0, 0, 0, {}};
  Rng rng(derive_seed(seed, "verify-reduction"));
  for (int i = 0; i < graphs; ++i) {
    NetworkGraph g;
    do {
      const int n = uniform_int(rng, 3, max_nodes);
      g = random_triangle_free_graph(rng, n, 0.2 + 0.5 * uniform_unit(rng));
    } while (g.edge_count() == 0);
    ++r.instances;
    const ReductionReport rep = reduction_check(g, per_labeling_max_nodes);
    r.checks += 1 + static_cast<std::int64_t>(rep.labelings_checked);
    if (!rep.triangle_free || !rep.optimum_matches || rep.labeling_mismatches != 0) {
      note(r, "graph " + std::to_string(i) + " (n=" + std::to_string(rep.nodes) + "): optimum " +
                  rep.optimum.str() + " vs " + rep.cut_formula.str());
    }
  }
  return r;
}

}  // namespace monsched
