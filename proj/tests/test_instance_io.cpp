#include <doctest.h>

#include "monsched/errors.hpp"
#include "monsched/instance_io.hpp"
#include "monsched/verify.hpp"
#include "support.hpp"

using namespace monsched;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_instance(text, "t.inst");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse the path fixture file") {
  const InstanceFile f = load_instance(testing_support::data_path("path4.inst"));
  CHECK(f.graph.node_count() == 4);
  CHECK(f.graph.edge_count() == 3);
  REQUIRE(f.sensors.has_value());
  CHECK(f.sensors->size() == 2);
  CHECK(f.target_mode == InstanceFile::TargetMode::all_edges);
  CHECK(*f.lambda == 1);
  const auto inst = f.problem();
  CHECK(inst.coverage.to_text() == testing_support::path_fixture().coverage.to_text());
}

TEST_CASE("parse errors carry line numbers and the bad token") {
  CHECK(error_of("[nodes]\na\nb\n[edges]\na x9\n") == "t.inst:5: unknown node 'x9'");
  CHECK(error_of("[nodes]\na\na\n") == "t.inst:3: duplicate node 'a'");
  CHECK(error_of("[nodes]\na\n[wat]\n") == "t.inst:3: unknown section '[wat]'");
  CHECK(error_of("a b\n").find("t.inst:1:") == 0);
  CHECK(error_of("[nodes]\na\nb\n[edges]\na b\nb a\n").find("t.inst:6:") == 0);
  CHECK(error_of("[nodes]\na\n[params]\nk = two\n").find("'two'") != std::string::npos);
  CHECK(error_of("[nodes]\na\n[targets]\na zz\n").find("'zz'") != std::string::npos);
  CHECK(error_of("[nodes]\na\n[params]\nobjective = both\n").find("t.inst:4:") == 0);
}

TEST_CASE("listed targets and comments") {
  const auto f = parse_instance(
      "# demo\n[nodes]\na\nb\nc\n[edges]\na b  # pipe\nb c\n[sensors]\nb\n[targets]\na\nb c\n"
      "[params]\nlambda = 1\nk = 3\nsigma = 2\nobjective = isolation\n");
  CHECK(f.target_mode == InstanceFile::TargetMode::listed);
  REQUIRE(f.targets.size() == 2);
  CHECK(f.targets[0] == Target::node(0));
  CHECK(f.targets[1].kind == Target::Kind::edge);
  CHECK(f.objective == Objective::isolation);
  CHECK(f.problem().coverage.y_count() == 1);
}

TEST_CASE("missing parameters") {
  const auto f = parse_instance("[nodes]\na\n[params]\nk = 2\n");
  CHECK_THROWS_AS(f.problem(), InputError);
}

TEST_CASE("instance text round trip") {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    InstanceFile f;
    f.graph = random_graph(rng, 8, 0.4);
    f.target_mode = t % 2 ? InstanceFile::TargetMode::all_edges : InstanceFile::TargetMode::all_nodes;
    f.lambda = 1 + t % 3;
    f.k = 4;
    f.sigma = 2;
    if (t % 3 == 0) f.sensors = std::vector<NodeId>{0, 3, 5};
    const std::string text = format_instance(f);
    const InstanceFile back = parse_instance(text);
    CHECK(format_instance(back) == text);
    CHECK(back.problem().coverage.to_text() == f.problem().coverage.to_text());
  }
}

TEST_CASE("edge list conversion") {
  const auto f = instance_from_edge_list("# net\n1 2\n2 3\n\n3 1\n2 1\n");
  CHECK(f.graph.node_count() == 3);
  CHECK(f.graph.edge_count() == 3);
  CHECK_FALSE(f.sensors.has_value());
  CHECK(f.target_mode == InstanceFile::TargetMode::all_nodes);
  CHECK_THROWS_AS(instance_from_edge_list("1 2 3\n"), InputError);
  CHECK_THROWS_AS(instance_from_edge_list("1 1\n"), InputError);
}

TEST_CASE("labelings round trip through text") {
  Rng rng(3);
  RandomInstanceSpec spec;
  spec.max_k = 9;
  spec.max_actions = 1000;
  for (int t = 0; t < 50; ++t) {
    const auto inst = random_instance(rng, spec);
    const Labeling l = random_partial_labeling(rng, inst.coverage.x_count(), inst.k, inst.sigma);
    const std::string text = format_labeling(inst.coverage, l) + format_report(inst, score(inst, l));
    CHECK(parse_labeling(text, inst.coverage, inst.k) == l);
    CHECK(parse_labeling(format_labeling(inst.coverage, l, false), inst.coverage, inst.k) == l);
  }
}

TEST_CASE("labeling parse errors") {
  const auto inst = testing_support::path_fixture();
  CHECK_THROWS_AS(parse_labeling("9: 1\n", inst.coverage, 2), InputError);
  CHECK_THROWS_AS(parse_labeling("2: 3\n", inst.coverage, 2), InputError);
  CHECK_THROWS_AS(parse_labeling("2: 1\n2: 2\n", inst.coverage, 2), InputError);
  CHECK_THROWS_AS(parse_labeling("2 1\n", inst.coverage, 2), InputError);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(1e-7) == "1e-07");
}
