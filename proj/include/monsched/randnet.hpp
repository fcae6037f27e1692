#ifndef MONSCHED_RANDNET_HPP
#define MONSCHED_RANDNET_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "monsched/exec.hpp"
#include "monsched/graph.hpp"

namespace monsched {

struct GeometricGraphSpec {
  int n = 100;
  double side = 10.0;    // nodes uniform in [0, side]^2
  double radius = 2.0;   // edge iff Euclidean distance <= radius
  bool torus = false;    // wrap-around distances
  std::uint64_t seed = 0;

  double density() const { return n / (side * side); }
  void validate() const;
};

struct GeometricGraph {
  NetworkGraph graph;
  std::vector<std::pair<double, double>> coords;
};

struct ErdosRenyiSpec {
  int n = 100;
  double p = 0.05;
  std::uint64_t seed = 0;
  void validate() const;
};

GeometricGraph gen_geometric(const GeometricGraphSpec& spec, Exec exec = Exec::parallel);
NetworkGraph gen_erdos_renyi(const ErdosRenyiSpec& spec);

// Connected planar-ish stand-in for a distribution network: Euclidean MST on
// n uniform points plus the shortest remaining pairs until m edges.
NetworkGraph gen_network_standin(int n, int m, std::uint64_t seed);

// 1 - ((k - sigma) / k) * exp(-sigma * density * pi * r^2 / k)
double closed_form_geometric(int k, int sigma, double density, double radius);
// 1 - ((k - sigma) / k) * exp(-sigma * n * p / k)
double closed_form_er(int k, int sigma, int n, double p);

struct RandomScheduleStats {
  double mean = 0.0;
  double stderr_ = 0.0;
  int trials = 0;
  std::vector<double> samples;  // per trial, in trial order
};

// Every node hosts a device and is a target. Each trial gives every device a
// uniform sigma-subset of the k slots and scores the result; trial t uses a
// seed derived from (seed, t), so results are independent of thread count.
RandomScheduleStats simulate_random_schedule(const NetworkGraph& g, int k, int sigma,
                                             int lambda, int trials, std::uint64_t seed,
                                             Exec exec = Exec::parallel);

}  // namespace monsched

#endif  // MONSCHED_RANDNET_HPP
