#include "monsched/oracle.hpp"

#include <algorithm>
#include <limits>

#include "monsched/combinatorics.hpp"
#include "monsched/coverage.hpp"
#include "monsched/errors.hpp"

namespace monsched {

namespace {

// Depth-first enumeration of exactly-sigma labelings with incremental
// potential; players are fixed left to right.
class Enumerator {
 public:
  Enumerator(const CoverageGraph& cov, int k, const std::vector<LabelMask>& subsets,
             std::size_t keep)
      : cov_(cov),
        k_(k),
        subsets_(subsets),
        keep_(keep),
        counts_(static_cast<std::size_t>(cov.y_count()) * k, 0),
        current_(static_cast<std::size_t>(cov.x_count()), 0) {}

  void fix_first(LabelMask a) {
    add(0, a);
    current_[0] = a;
  }

  void run(int player) {
    if (player == cov_.x_count()) {
      record();
      return;
    }
    for (LabelMask a : subsets_) {
      add(player, a);
      current_[player] = a;
      run(player + 1);
      remove(player, a);
    }
  }

  std::int64_t best = -1;
  std::uint64_t best_count = 0;
  std::vector<std::vector<LabelMask>> best_masks;

 private:
  void add(int x, LabelMask a) {
    for (int y : cov_.x_neighbors(x)) {
      std::int32_t* row = &counts_[static_cast<std::size_t>(y) * k_];
      for (LabelMask m = a; m != 0; m &= m - 1) phi_ += row[__builtin_ctzll(m)]++ == 0;
    }
  }
  void remove(int x, LabelMask a) {
    for (int y : cov_.x_neighbors(x)) {
      std::int32_t* row = &counts_[static_cast<std::size_t>(y) * k_];
      for (LabelMask m = a; m != 0; m &= m - 1) phi_ -= --row[__builtin_ctzll(m)] == 0;
    }
  }
  void record() {
    if (phi_ > best) {
      best = phi_;
      best_count = 0;
      best_masks.clear();
    }
    if (phi_ == best) {
      ++best_count;
      if (best_masks.size() < keep_) best_masks.push_back(current_);
    }
  }

  const CoverageGraph& cov_;
  int k_;
  const std::vector<LabelMask>& subsets_;
  std::size_t keep_;
  std::vector<std::int32_t> counts_;
  std::vector<LabelMask> current_;
  std::int64_t phi_ = 0;
};

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

}  // namespace

OracleResult exact_optimal_schedule(const ProblemInstance& inst, const OracleOptions& options) {
  const CoverageGraph& cov = inst.coverage;
  const std::uint64_t n_actions = binomial(inst.k, inst.sigma);
  OracleResult result;
  result.space_size = saturating_pow(n_actions, cov.x_count());
  if (result.space_size > options.limit) {
    throw ResourceRefusal("oracle refused: search space C(" + std::to_string(inst.k) + "," +
                          std::to_string(inst.sigma) + ")^" + std::to_string(cov.x_count()) +
                          " = " +
                          (result.space_size == std::numeric_limits<std::uint64_t>::max()
                               ? std::string("overflow")
                               : std::to_string(result.space_size)) +
                          " exceeds limit " + std::to_string(options.limit));
  }
  const auto subsets = all_subsets(inst.k, inst.sigma);
  const int chunks = static_cast<int>(subsets.size());

  // One chunk per action of the first player; merged in chunk order.
  std::vector<std::int64_t> best(chunks, -1);
  std::vector<std::uint64_t> count(chunks, 0);
  std::vector<std::vector<std::vector<LabelMask>>> masks(chunks);
#pragma omp parallel for schedule(dynamic) if (options.exec == Exec::parallel)
  for (int c = 0; c < chunks; ++c) {
    Enumerator e(cov, inst.k, subsets, options.keep);
    e.fix_first(subsets[c]);
    e.run(1);
    best[c] = e.best;
    count[c] = e.best_count;
    masks[c] = std::move(e.best_masks);
  }

  result.best_potential = *std::max_element(best.begin(), best.end());
  for (int c = 0; c < chunks; ++c) {
    if (best[c] != result.best_potential) continue;
    result.optimal_count += count[c];
    for (auto& m : masks[c]) {
      if (result.optimal.size() >= options.keep) break;
      Labeling l(cov.x_count(), inst.k);
      for (int x = 0; x < cov.x_count(); ++x) l.set_mask(x, m[x]);
      result.optimal.push_back(std::move(l));
    }
  }
  result.best_score =
      Fraction(static_cast<std::uint64_t>(result.best_potential), inst.score_denominator());
  return result;
}

int cut_size(const NetworkGraph& g, const std::vector<bool>& side) {
  int cut = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    cut += side.at(a) != side.at(b);
  }
  return cut;
}

MaxCut max_cut_brute(const NetworkGraph& g) {
  const int n = g.node_count();
  if (n > 24) throw ResourceRefusal("max-cut enumeration refused for n > 24");
  MaxCut best;
  best.side.assign(static_cast<std::size_t>(n), false);
  if (n <= 1) return best;
  // Node n-1 stays in V1; the other n-1 nodes range over all 2^(n-1) sides.
  const std::uint32_t total = 1U << (n - 1);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    int cut = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto [a, b] = g.endpoints(e);
      const bool sa = a < n - 1 && ((mask >> a) & 1U);
      const bool sb = b < n - 1 && ((mask >> b) & 1U);
      cut += sa != sb;
    }
    if (cut > best.cut_size) {
      best.cut_size = cut;
      for (int v = 0; v < n; ++v) best.side[v] = v < n - 1 && ((mask >> v) & 1U);
    }
  }
  return best;
}

bool is_triangle_free(const NetworkGraph& g) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    const auto na = g.neighbors(a);
    const auto nb = g.neighbors(b);
    auto i = na.begin();
    auto j = nb.begin();
    while (i != na.end() && j != nb.end()) {
      if (*i == *j) return false;
      if (*i < *j) ++i; else ++j;
    }
  }
  return true;
}

ProblemInstance reduced_maxcut_instance(const NetworkGraph& g, Exec exec) {
  if (g.edge_count() == 0) throw InputError("max-cut mapping needs at least one edge");
  std::vector<NodeId> all(static_cast<std::size_t>(g.node_count()));
  for (NodeId v = 0; v < g.node_count(); ++v) all[v] = v;
  const auto targets = g.all_edge_targets();
  return ProblemInstance(build_detection(g, all, targets, 1, exec), 2, 1);
}

bool ReductionReport::ok() const {
  if (triangle_free) return optimum_matches && labeling_mismatches == 0;
  return lower_bound_holds;
}

ReductionReport reduction_check(const NetworkGraph& g, int per_labeling_max_nodes, Exec exec) {
  const ProblemInstance inst = reduced_maxcut_instance(g, exec);
  ReductionReport rep;
  rep.nodes = g.node_count();
  rep.edges = g.edge_count();
  rep.triangle_free = is_triangle_free(g);

  OracleOptions opts;
  opts.limit = std::uint64_t{1} << 20;
  opts.keep = 1;
  opts.exec = exec;
  rep.optimum = exact_optimal_schedule(inst, opts).best_score;

  rep.max_cut = max_cut_brute(g).cut_size;
  const auto m = static_cast<std::uint64_t>(g.edge_count());
  rep.cut_formula = Fraction(m + static_cast<std::uint64_t>(rep.max_cut), 2 * m);
  rep.optimum_matches = rep.optimum == rep.cut_formula;
  rep.lower_bound_holds = rep.optimum >= rep.cut_formula;

  if (g.node_count() <= per_labeling_max_nodes) {
    const int n = g.node_count();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      Labeling l(n, 2);
      std::vector<bool> side(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        side[v] = (mask >> v) & 1U;
        l.add_label(v, side[v] ? 2 : 1);
      }
      const Fraction expected(m + static_cast<std::uint64_t>(cut_size(g, side)), 2 * m);
      ++rep.labelings_checked;
      rep.labeling_mismatches += score(inst, l).score != expected;
    }
  }
  return rep;
}

}  // namespace monsched
