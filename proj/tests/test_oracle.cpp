#include <doctest.h>

#include "monsched/errors.hpp"
#include "monsched/oracle.hpp"
#include "monsched/verify.hpp"
#include "support.hpp"

using namespace monsched;
using testing_support::naive_best_potential;
using testing_support::path_fixture;

TEST_CASE("oracle on the path fixture") {
  const auto inst = path_fixture();
  const OracleResult r = exact_optimal_schedule(inst);
  CHECK(r.best_score == Fraction(2, 3));
  CHECK(r.best_potential == 4);
  CHECK(r.space_size == 4);
  CHECK(r.optimal_count == 2);
  REQUIRE(r.optimal.size() == 2);
  CHECK(r.optimal[0].mask(0) == 0b01);
  CHECK(r.optimal[0].mask(1) == 0b10);
}

TEST_CASE("oracle agrees with plain recursion") {
  Rng rng(12);
  RandomInstanceSpec spec;
  spec.max_sensors = 5;
  for (int t = 0; t < 60; ++t) {
    const auto inst = random_instance(rng, spec);
    const OracleResult r = exact_optimal_schedule(inst);
    CHECK(r.best_potential == naive_best_potential(inst));
    for (const auto& l : r.optimal) CHECK(labeling_potential(inst.coverage, l) == r.best_potential);
  }
}

TEST_CASE("oracle refuses large spaces") {
  const auto inst = path_fixture(10, 5);
  OracleOptions opt;
  opt.limit = 1000;
  CHECK_THROWS_AS(exact_optimal_schedule(inst, opt), ResourceRefusal);
}

TEST_CASE("oracle is the same serial and parallel") {
  Rng rng(44);
  RandomInstanceSpec spec;
  spec.max_sensors = 7;
  for (int t = 0; t < 15; ++t) {
    const auto inst = random_instance(rng, spec);
    OracleOptions s;
    s.exec = Exec::serial;
    const auto a = exact_optimal_schedule(inst, s);
    const auto b = exact_optimal_schedule(inst);
    CHECK(a.best_potential == b.best_potential);
    CHECK(a.optimal_count == b.optimal_count);
    CHECK(a.optimal == b.optimal);
  }
}

TEST_CASE("max cut brute force") {
  const NetworkGraph c4 = NetworkGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(max_cut_brute(c4).cut_size == 4);
  const NetworkGraph tri = NetworkGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(max_cut_brute(tri).cut_size == 2);
  CHECK_FALSE(is_triangle_free(tri));
  CHECK(is_triangle_free(c4));
  const auto mc = max_cut_brute(c4);
  CHECK(cut_size(c4, mc.side) == 4);
}

TEST_CASE("reduction identity on a four-cycle") {
  const NetworkGraph c4 = NetworkGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const ReductionReport rep = reduction_check(c4);
  CHECK(rep.optimum == Fraction(1, 1));
  CHECK(rep.cut_formula == Fraction(1, 1));
  CHECK(rep.ok());
  CHECK(rep.labelings_checked == 16);
  CHECK(rep.labeling_mismatches == 0);
}

TEST_CASE("a triangle breaks the cut identity but keeps the bound") {
  // At range 1 each node of a triangle covers all three edges, so using both
  // labels anywhere covers everything, while the best cut is only 2 of 3.
  const NetworkGraph tri = NetworkGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  const ReductionReport rep = reduction_check(tri);
  CHECK(rep.cut_formula == Fraction(5, 6));
  CHECK(rep.optimum == Fraction(1, 1));
  CHECK_FALSE(rep.optimum_matches);
  CHECK(rep.lower_bound_holds);
  CHECK(rep.ok());
}

TEST_CASE("reduction suite on random triangle-free graphs") {
  const SuiteResult r = reduction_suite(3, 20, 10, 7);
  CHECK(r.passed());
}
