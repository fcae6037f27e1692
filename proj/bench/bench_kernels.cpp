#include <benchmark/benchmark.h>

#include <numeric>

#include "monsched/combinatorics.hpp"
#include "monsched/coverage.hpp"
#include "monsched/greedy.hpp"
#include "monsched/oracle.hpp"
#include "monsched/randnet.hpp"
#include "monsched/verify.hpp"

using namespace monsched;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

const NetworkGraph& network() {
  static const NetworkGraph g = gen_network_standin(270, 366, 1);
  return g;
}

std::vector<NodeId> all_nodes(const NetworkGraph& g) {
  std::vector<NodeId> v(static_cast<std::size_t>(g.node_count()));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void BM_BuildDetection(benchmark::State& state) {
  const auto& g = network();
  const auto nodes = all_nodes(g);
  const auto targets = g.all_edge_targets();
  for (auto _ : state) benchmark::DoNotOptimize(build_detection(g, nodes, targets, 3, mode(state)));
}

void BM_BuildIsolation(benchmark::State& state) {
  const auto& g = network();
  const auto nodes = all_nodes(g);
  const auto targets = g.all_node_targets();
  for (auto _ : state) benchmark::DoNotOptimize(build_isolation(g, nodes, targets, 2, mode(state)));
}

void BM_Greedy(benchmark::State& state) {
  const auto& g = network();
  const auto nodes = all_nodes(g);
  const ProblemInstance inst(build_detection(g, nodes, g.all_edge_targets(), 2), 10, 2);
  GreedyOptions opt;
  opt.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_schedule(inst, opt));
}

void BM_Oracle(benchmark::State& state) {
  Rng rng(5);
  RandomInstanceSpec spec;
  spec.min_nodes = spec.max_nodes = 9;
  spec.max_sensors = 9;
  ProblemInstance inst;
  do {
    inst = random_instance(rng, spec);
  } while (inst.coverage.x_count() < 7 || binomial(inst.k, inst.sigma) < 6);
  OracleOptions opt;
  opt.exec = mode(state);
  opt.limit = 1ULL << 40;
  for (auto _ : state) benchmark::DoNotOptimize(exact_optimal_schedule(inst, opt));
}

void BM_RandomSchedule(benchmark::State& state) {
  const auto g = gen_erdos_renyi({500, 0.02, 3});
  for (auto _ : state) benchmark::DoNotOptimize(simulate_random_schedule(g, 10, 2, 1, 64, 1, mode(state)));
}

void BM_Geometric(benchmark::State& state) {
  const GeometricGraphSpec spec{2000, 45.0, 2.0, true, 7};
  for (auto _ : state) benchmark::DoNotOptimize(gen_geometric(spec, mode(state)));
}

}  // namespace

// Argument 0 runs the serial reference, 1 the OpenMP kernel.
BENCHMARK(BM_BuildDetection)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildIsolation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Greedy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomSchedule)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Geometric)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
