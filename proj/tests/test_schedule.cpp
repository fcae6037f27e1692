#include <doctest.h>

#include "monsched/combinatorics.hpp"
#include "monsched/errors.hpp"
#include "monsched/fraction.hpp"
#include "monsched/schedule.hpp"
#include "monsched/verify.hpp"
#include "support.hpp"

using namespace monsched;
using testing_support::naive_potential;
using testing_support::path_fixture;

TEST_CASE("labeling to schedule") {
  Labeling l(2, 3);
  l.set_mask(0, 0b101);
  l.set_mask(1, 0b110);
  const Schedule s = labeling_to_schedule(l);
  CHECK(s.slots == std::vector<std::vector<int>>{{0}, {1}, {0, 1}});
  CHECK(schedule_to_labeling(s, 2) == l);
}

TEST_CASE("empty labeling gives empty slots and zero score") {
  const auto inst = path_fixture();
  const Labeling l(2, 2);
  const Schedule s = labeling_to_schedule(l);
  for (const auto& slot : s.slots) CHECK(slot.empty());
  CHECK(score(inst, l).score == Fraction(0, 1));
}

TEST_CASE("schedule round trip on random labelings") {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const Labeling l = random_partial_labeling(rng, 7, 9, 4);
    CHECK(schedule_to_labeling(labeling_to_schedule(l), 7) == l);
  }
}

TEST_CASE("f_union on the path fixture") {
  const auto inst = path_fixture();
  Labeling l(2, 2);
  l.add_label(0, 1);
  l.add_label(1, 2);
  // Y order follows the targets: 1-2, 2-3, 3-4.
  CHECK(f_union(l, inst.coverage, 1) == 0b11);
  CHECK(f_union(l, inst.coverage, 0) == 0b01);
  CHECK(f_union(l, inst.coverage, 2) == 0b10);
}

TEST_CASE("f_union of an uncovered target is empty") {
  const auto cov = CoverageGraph::from_adjacency(2, {{0}});
  Labeling l(1, 3);
  l.set_mask(0, 0b111);
  CHECK(f_union(l, cov, 1) == 0);
}

TEST_CASE("saturated labels reach sigma slots") {
  const auto cov = CoverageGraph::from_adjacency(3, {{0, 1}, {1}});
  Labeling l(2, 5);
  l.set_mask(0, 0b111);
  l.set_mask(1, 0b111);
  CHECK(f_union(l, cov, 0) == 0b111);
  CHECK(f_union(l, cov, 1) == 0b111);
}

TEST_CASE("score on the path fixture") {
  const auto inst = path_fixture();
  Labeling l(2, 2);
  l.add_label(0, 1);
  l.add_label(1, 2);
  const ScheduleReport r = score(inst, l);
  CHECK(r.per_slot_covered == std::vector<std::int64_t>{2, 2});
  CHECK(r.potential == 4);
  CHECK(r.score == Fraction(4, 6));
  CHECK(r.score.str_with_decimal() == "2/3 (0.666667)");
  CHECK(r.score.value() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(expected_detection_q(inst, l) == Fraction(2, 3));
}

TEST_CASE("full coverage scores 1") {
  const auto inst = path_fixture(3, 3);
  Labeling l(2, 3);
  l.set_mask(0, 0b111);
  l.set_mask(1, 0b111);
  CHECK(score(inst, l).score == Fraction(1, 1));
  CHECK(expected_detection_q(inst, l) == Fraction(1, 1));
}

TEST_CASE("target covered in one of two slots has Q one half") {
  const auto cov = CoverageGraph::from_adjacency(1, {{0}});
  const ProblemInstance inst(cov, 2, 1);
  Labeling l(1, 2);
  l.add_label(0, 2);
  CHECK(expected_detection_q(inst, l) == Fraction(1, 2));
}

TEST_CASE("validation names offending devices") {
  const auto inst = path_fixture(3, 1);
  Labeling l(2, 3);
  l.set_mask(1, 0b011);
  try {
    validate_labeling(inst, l);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("at: 3") != std::string::npos);
  }
  CHECK_THROWS_AS(validate_labeling(inst, Labeling(3, 3)), ValidationError);
  CHECK_THROWS_AS(ProblemInstance(inst.coverage, 2, 3), InputError);
  CHECK_THROWS_AS(ProblemInstance(inst.coverage, 65, 1), InputError);
}

TEST_CASE("dual forms, monotonicity and bounds on random labelings") {
  Rng rng(17);
  RandomInstanceSpec spec;
  spec.max_k = 8;
  spec.max_actions = 1000;
  for (int t = 0; t < 40; ++t) {
    const auto inst = random_instance(rng, spec);
    for (int r = 0; r < 10; ++r) {
      Labeling l = random_partial_labeling(rng, inst.coverage.x_count(), inst.k, inst.sigma);
      const ScheduleReport before = score(inst, l);
      CHECK(before.potential == naive_potential(inst.coverage, l));
      CHECK(before.score <= Fraction(1, 1));
      const int x = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(l.size())));
      l.add_label(x, 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(inst.k))));
      const ProblemInstance unbounded(inst.coverage, inst.k, inst.k);
      CHECK(score(unbounded, l).score >= before.score);
    }
  }
}

TEST_CASE("fractions") {
  CHECK(Fraction(2, 4) == Fraction(1, 2));
  CHECK(Fraction(1, 3) + Fraction(1, 6) == Fraction(1, 2));
  CHECK(Fraction(2, 3) * Fraction(3, 4) == Fraction(1, 2));
  CHECK(Fraction(1, 3) < Fraction(1, 2));
  CHECK(Fraction(0, 5).str() == "0/1");
}

TEST_CASE("subset ranking") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
  const auto all = all_subsets(6, 3);
  REQUIRE(all.size() == 20);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(label_count(all[i]) == 3);
    CHECK(subset_rank(all[i]) == i);
    CHECK(subset_unrank(i, 6, 3) == all[i]);
    if (i > 0) CHECK(all[i - 1] < all[i]);
  }
}

TEST_CASE("random subsets are uniform over sigma-subsets") {
  Rng rng(2024);
  std::vector<int> hits(10, 0);
  for (int t = 0; t < 20000; ++t) hits[subset_rank(random_subset_mask(rng, 5, 2))]++;
  for (int h : hits) CHECK(h == doctest::Approx(2000).epsilon(0.1));
}
