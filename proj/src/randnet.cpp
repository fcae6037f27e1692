#include "monsched/randnet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "monsched/coverage.hpp"
#include "monsched/errors.hpp"
#include "monsched/rng.hpp"
#include "monsched/schedule.hpp"

namespace monsched {

void GeometricGraphSpec::validate() const {
  if (n < 0) throw InputError("node count must be non-negative");
  if (!(side > 0.0)) throw InputError("area side must be positive");
  if (!(radius > 0.0)) throw InputError("radius must be positive");
}

void ErdosRenyiSpec::validate() const {
  if (n < 0) throw InputError("node count must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
}

namespace {

GraphBuilder numbered_nodes(int n) {
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_node(std::to_string(i));
  return b;
}

}  // namespace

GeometricGraph gen_geometric(const GeometricGraphSpec& spec, Exec exec) {
  spec.validate();
  Rng rng(derive_seed(spec.seed, "geometric"));
  GeometricGraph out;
  out.coords.resize(static_cast<std::size_t>(spec.n));
  for (auto& [x, y] : out.coords) {
    x = uniform_unit(rng) * spec.side;
    y = uniform_unit(rng) * spec.side;
  }
  const double r2 = spec.radius * spec.radius;
  auto delta = [&](double a, double b) {
    double d = std::abs(a - b);
    if (spec.torus) d = std::min(d, spec.side - d);
    return d;
  };
  std::vector<std::vector<int>> higher(static_cast<std::size_t>(spec.n));
#pragma omp parallel for schedule(dynamic, 16) if (exec == Exec::parallel)
  for (int i = 0; i < spec.n; ++i) {
    for (int j = i + 1; j < spec.n; ++j) {
      const double dx = delta(out.coords[i].first, out.coords[j].first);
      const double dy = delta(out.coords[i].second, out.coords[j].second);
      if (dx * dx + dy * dy <= r2) higher[i].push_back(j);
    }
  }
  GraphBuilder b = numbered_nodes(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    for (int j : higher[i]) b.add_edge(i, j);
  }
  out.graph = std::move(b).build();
  return out;
}

NetworkGraph gen_erdos_renyi(const ErdosRenyiSpec& spec) {
  spec.validate();
  Rng rng(derive_seed(spec.seed, "erdos-renyi"));
  GraphBuilder b = numbered_nodes(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    for (int j = i + 1; j < spec.n; ++j) {
      if (uniform_unit(rng) < spec.p) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

NetworkGraph gen_network_standin(int n, int m, std::uint64_t seed) {
  if (n < 2) throw InputError("stand-in network needs at least two nodes");
  const long max_edges = static_cast<long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_edges) throw InputError("edge count must lie in [n-1, n(n-1)/2]");
  Rng rng(derive_seed(seed, "network-standin"));
  std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(n));
  for (auto& [x, y] : pts) {
    x = uniform_unit(rng);
    y = uniform_unit(rng);
  }
  struct Pair {
    double d2;
    int a, b;
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(max_edges));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double dx = pts[a].first - pts[b].first;
      const double dy = pts[a].second - pts[b].second;
      pairs.push_back({dx * dx + dy * dy, a, b});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& l, const Pair& r) {
    return std::tie(l.d2, l.a, l.b) < std::tie(r.d2, r.a, r.b);
  });

  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  GraphBuilder b = numbered_nodes(n);
  std::vector<char> in_tree(pairs.size(), 0);
  int edges = 0;
  for (std::size_t i = 0; i < pairs.size() && edges < n - 1; ++i) {
    const int ra = find(pairs[i].a);
    const int rb = find(pairs[i].b);
    if (ra == rb) continue;
    parent[ra] = rb;
    in_tree[i] = 1;
    b.add_edge(pairs[i].a, pairs[i].b);
    ++edges;
  }
  for (std::size_t i = 0; i < pairs.size() && edges < m; ++i) {
    if (in_tree[i]) continue;
    b.add_edge(pairs[i].a, pairs[i].b);
    ++edges;
  }
  return std::move(b).build();
}

namespace {

void check_k_sigma(int k, int sigma) {
  if (k < 1 || sigma < 1) throw InputError("k and sigma must be positive");
  if (sigma > k) throw InputError("sigma must not exceed k");
}

double closed_form(int k, int sigma, double mean_degree) {
  const double idle = static_cast<double>(k - sigma) / k;
  return 1.0 - idle * std::exp(-static_cast<double>(sigma) * mean_degree / k);
}

}  // namespace

double closed_form_geometric(int k, int sigma, double density, double radius) {
  check_k_sigma(k, sigma);
  if (density < 0.0 || radius < 0.0) throw InputError("density and radius must be non-negative");
  return closed_form(k, sigma, density * std::numbers::pi * radius * radius);
}

double closed_form_er(int k, int sigma, int n, double p) {
  check_k_sigma(k, sigma);
  if (n < 0 || p < 0.0 || p > 1.0) throw InputError("need n >= 0 and p in [0, 1]");
  return closed_form(k, sigma, n * p);
}

RandomScheduleStats simulate_random_schedule(const NetworkGraph& g, int k, int sigma,
                                             int lambda, int trials, std::uint64_t seed,
                                             Exec exec) {
  check_k_sigma(k, sigma);
  if (trials < 1) throw InputError("trials must be positive");
  std::vector<NodeId> all(static_cast<std::size_t>(g.node_count()));
  std::iota(all.begin(), all.end(), 0);
  const auto targets = g.all_node_targets();
  const ProblemInstance inst(build_detection(g, all, targets, lambda, exec), k, sigma);
  const int n = g.node_count();
  const std::uint64_t base = derive_seed(seed, "random-schedule");

  RandomScheduleStats out;
  out.trials = trials;
  out.samples.assign(static_cast<std::size_t>(trials), 0.0);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(base, static_cast<std::uint64_t>(t)));
    Labeling l(n, k);
    for (int x = 0; x < n; ++x) l.set_mask(x, random_subset_mask(rng, k, sigma));
    out.samples[t] = score(inst, l).score.value();
  }
  double sum = 0.0;
  for (double s : out.samples) sum += s;
  out.mean = sum / trials;
  if (trials > 1) {
    double ss = 0.0;
    for (double s : out.samples) ss += (s - out.mean) * (s - out.mean);
    out.stderr_ = std::sqrt(ss / (trials - 1)) / std::sqrt(static_cast<double>(trials));
  }
  return out;
}

}  // namespace monsched
