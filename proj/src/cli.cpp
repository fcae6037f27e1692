#include "monsched/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include "monsched/coverage.hpp"
#include "monsched/domination.hpp"
#include "monsched/errors.hpp"
#include "monsched/exec.hpp"
#include "monsched/game.hpp"
#include "monsched/greedy.hpp"
#include "monsched/instance_io.hpp"
#include "monsched/oracle.hpp"
#include "monsched/randnet.hpp"
#include "monsched/verify.hpp"

namespace monsched {

namespace {

std::pair<int, int> parse_k_range(const std::string& text) {
  const auto dots = text.find("..");
  int a = 0;
  int b = 0;
  try {
    if (dots == std::string::npos) {
      a = b = std::stoi(text);
    } else {
      a = std::stoi(text.substr(0, dots));
      b = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw InputError("invalid k range '" + text + "' (expected a..b)");
  }
  if (a < 1 || b < a || b > kMaxSlots) {
    throw InputError("invalid k range '" + text + "': need 1 <= a <= b <= " +
                     std::to_string(kMaxSlots));
  }
  return {a, b};
}

std::vector<int> parse_sites(const std::string& text, const CoverageGraph& cov) {
  std::vector<int> sites;
  if (text == "all") {
    for (int x = 0; x < cov.x_count(); ++x) sites.push_back(x);
    return sites;
  }
  std::set<int> seen;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string name(rest.substr(0, comma));
    const auto& names = cov.x_names();
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw InputError("site '" + name + "' is not a sensor location");
    const int x = static_cast<int>(it - names.begin());
    if (!seen.insert(x).second) throw InputError("site '" + name + "' listed twice");
    sites.push_back(x);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  if (sites.empty()) throw InputError("no candidate sites given");
  return sites;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

std::string ratio(std::int64_t num, std::uint64_t den) {
  return format_number(static_cast<double>(num) / static_cast<double>(den));
}

std::string join_names(const CoverageGraph& cov, std::span<const int> xs) {
  std::vector<int> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  std::string s;
  for (std::size_t i = 0; i < sorted.size(); ++i) s += (i ? "," : "") + cov.x_name(sorted[i]);
  return s;
}

// ---------------------------------------------------------------- commands

struct BuildCoverageArgs {
  std::string instance;
  std::string out;
};

int cmd_build_coverage(const BuildCoverageArgs& a, std::ostream& out, std::ostream& err) {
  const InstanceFile file = load_instance(a.instance);
  if (!file.lambda) throw InputError(a.instance + ": [params] lambda is required");
  const auto sensors = file.sensor_nodes();
  const auto targets = file.target_list();
  const CoverageGraph cov =
      file.objective == Objective::isolation
          ? build_isolation(file.graph, sensors, targets, *file.lambda, Exec::parallel,
                            kDefaultPairWarnThreshold, &err)
          : build_detection(file.graph, sensors, targets, *file.lambda);
  out << "objective = " << to_string(cov.objective()) << '\n';
  out << "x_count = " << cov.x_count() << '\n';
  out << "y_count = " << cov.y_count() << '\n';
  out << "edges = " << cov.edge_count() << '\n';
  emit(out, a.out, cov.to_text());
  return kExitOk;
}

struct ScheduleArgs {
  std::string instance;
  std::string solver = "blll";
  std::uint64_t seed = 0;
  std::int64_t iters = 20000;
  double epsilon = 0.015;
  bool printed = false;
  std::string trace;
  std::string out;
  std::uint64_t oracle_limit = kDefaultOracleLimit;
  bool random_ties = false;
};

int cmd_schedule(const ScheduleArgs& a, std::ostream& out) {
  const ProblemInstance inst = load_instance(a.instance).problem();
  std::ostringstream doc;
  Labeling labeling;
  std::string trace_csv;

  if (a.solver == "greedy") {
    GreedyOptions opt;
    if (a.random_ties) opt.tie_break_seed = derive_seed(a.seed, "greedy-ties");
    GreedyResult r = greedy_schedule(inst, opt);
    doc << "# solver = greedy\n";
    doc << "# picks = " << r.trace.size() << '\n';
    trace_csv = "iteration,node,label,objective\n";
    for (const auto& p : r.trace) {
      trace_csv += std::to_string(p.iteration) + ',' + inst.coverage.x_name(p.x) + ',' +
                   std::to_string(p.label) + ',' + std::to_string(p.objective) + '\n';
    }
    labeling = std::move(r.labeling);
  } else if (a.solver == "blll") {
    BlllParams params;
    params.epsilon = a.epsilon;
    params.iterations = a.iters;
    params.seed = a.seed;
    params.acceptance = a.printed ? Acceptance::printed : Acceptance::log_linear;
    BlllResult r = blll_schedule(inst, params);
    doc << "# solver = blll\n";
    doc << "# seed = " << a.seed << '\n';
    doc << "# iterations = " << r.iterations_run << '\n';
    doc << "# accepted = " << r.accepted << '\n';
    doc << "# final_potential = " << r.final_potential << '\n';
    doc << "# best_potential = " << r.best_potential << '\n';
    trace_csv = "iteration,phi,score\n";
    for (const auto& t : r.trace) {
      trace_csv += std::to_string(t.iteration) + ',' + std::to_string(t.potential) + ',' +
                   ratio(t.potential, inst.score_denominator()) + '\n';
    }
    labeling = std::move(r.best_labeling);
  } else if (a.solver == "oracle") {
    OracleOptions opt;
    opt.limit = a.oracle_limit;
    OracleResult r = exact_optimal_schedule(inst, opt);
    doc << "# solver = oracle\n";
    doc << "# space = " << r.space_size << '\n';
    doc << "# optimal_labelings = " << r.optimal_count << '\n';
    labeling = r.optimal.front();
  } else {
    throw InputError("unknown solver '" + a.solver + "' (greedy, blll or oracle)");
  }

  const ScheduleReport report = score(inst, labeling);
  doc << format_labeling(inst.coverage, labeling) << format_report(inst, report);
  out << doc.str();
  if (!a.out.empty()) write_file(a.out, doc.str());
  if (!a.trace.empty()) {
    if (trace_csv.empty()) throw InputError("--trace is not available for the oracle solver");
    write_file(a.trace, trace_csv);
  }
  return kExitOk;
}

struct ScoreArgs {
  std::string instance;
  std::string labeling;
};

int cmd_score(const ScoreArgs& a, std::ostream& out) {
  const ProblemInstance inst = load_instance(a.instance).problem();
  const Labeling l = parse_labeling(read_file(a.labeling), inst.coverage, inst.k);
  validate_labeling(inst, l);
  out << format_report(inst, score(inst, l));
  return kExitOk;
}

struct PlaceArgs {
  std::string instance;
  int devices = 1;
  std::string sites = "all";
  std::string solver = "both";
  std::uint64_t seed = 0;
  std::int64_t iters = 20000;
  double epsilon = 0.015;
  std::string k_range;
  std::string csv;
  std::string out;
};

std::string placement_document(const ProblemInstance& inst, const std::string& mode,
                               const PlacementResult& r, Fraction& d) {
  const ProblemInstance placed(inst.coverage.restrict_x(r.best_sites), inst.k, inst.sigma);
  const ScheduleReport rep = score(placed, r.best_labeling);
  d = rep.score;
  std::ostringstream doc;
  doc << "# solver = " << mode << '\n';
  doc << "# placement = " << join_names(inst.coverage, r.best_sites) << '\n';
  doc << "# best_potential = " << r.best_potential << '\n';
  doc << format_labeling(placed.coverage, r.best_labeling) << format_report(placed, rep);
  return doc.str();
}

int cmd_place(const PlaceArgs& a, std::ostream& out) {
  const InstanceFile file = load_instance(a.instance);
  const ProblemInstance base = file.problem();
  const std::vector<int> sites = parse_sites(a.sites, base.coverage);
  if (a.devices < 1) throw InputError("--devices must be at least 1");
  if (a.devices > static_cast<int>(sites.size())) {
    throw InputError("--devices " + std::to_string(a.devices) + " exceeds the " +
                     std::to_string(sites.size()) + " candidate sites");
  }
  const bool joint = a.solver == "blll-joint" || a.solver == "both";
  const bool two_stage = a.solver == "two-stage" || a.solver == "both";
  if (!joint && !two_stage) {
    throw InputError("unknown solver '" + a.solver + "' (blll-joint, two-stage or both)");
  }

  BlllParams params;
  params.epsilon = a.epsilon;
  params.iterations = a.iters;
  params.seed = a.seed;

  if (!a.k_range.empty()) {
    if (!(joint && two_stage)) throw InputError("--k-range needs --solver both");
    const auto [k_lo, k_hi] = parse_k_range(a.k_range);
    if (k_lo < base.sigma) throw InputError("--k-range starts below sigma");
    std::string csv = "k,D_joint,D_twostage\n";
    for (int k = k_lo; k <= k_hi; ++k) {
      const ProblemInstance inst(base.coverage, k, base.sigma);
      BlllParams p = params;
      p.seed = derive_seed(a.seed, static_cast<std::uint64_t>(k));
      Fraction dj;
      Fraction dt;
      placement_document(inst, "blll-joint", blll_place_and_schedule(inst, sites, a.devices, p), dj);
      placement_document(inst, "two-stage", two_stage_place_and_schedule(inst, sites, a.devices, p), dt);
      csv += std::to_string(k) + ',' + format_number(dj.value()) + ',' + format_number(dt.value()) + '\n';
    }
    emit(out, a.csv, csv);
    return kExitOk;
  }

  std::string doc;
  Fraction dj;
  Fraction dt;
  if (joint) {
    doc += placement_document(base, "blll-joint", blll_place_and_schedule(base, sites, a.devices, params), dj);
  }
  if (two_stage) {
    doc += placement_document(base, "two-stage", two_stage_place_and_schedule(base, sites, a.devices, params), dt);
  }
  if (joint && two_stage) {
    doc += "[comparison]\nD_joint = " + dj.str_with_decimal() + "\nD_twostage = " +
           dt.str_with_decimal() + '\n';
    if (!a.csv.empty()) {
      write_file(a.csv, "k,D_joint,D_twostage\n" + std::to_string(base.k) + ',' +
                            format_number(dj.value()) + ',' + format_number(dt.value()) + '\n');
    }
  }
  out << doc;
  if (!a.out.empty()) write_file(a.out, doc);
  return kExitOk;
}

struct LifetimeArgs {
  std::string instance;
  int sigma = 1;
  std::string mode = "disjoint";
  int k = 0;
  std::int64_t budget = SearchOptions{}.budget;
  std::uint64_t exhaustive_limit = SearchOptions{}.exhaustive_limit;
  std::uint64_t seed = 0;
  bool seeded = false;
  std::string out;
};

std::string config_document(const NetworkGraph& g, const KSigmaConfig& cfg) {
  const ProblemInstance inst = domination_instance(g, cfg.k, cfg.sigma);
  const Labeling l = config_to_labeling(cfg);
  return format_labeling(inst.coverage, l) + format_report(inst, score(inst, l));
}

int cmd_lifetime(const LifetimeArgs& a, std::ostream& out) {
  const NetworkGraph g = load_instance(a.instance).graph;
  if (g.node_count() == 0) throw InputError(a.instance + ": graph has no nodes");
  if (a.sigma < 1) throw InputError("--sigma must be at least 1");
  const std::optional<std::uint64_t> seed =
      a.seeded ? std::optional<std::uint64_t>(derive_seed(a.seed, "domatic")) : std::nullopt;
  std::ostringstream doc;

  if (a.mode == "disjoint") {
    const DomaticPartition dp = greedy_domatic_partition(g, seed);
    validate_partition(g, dp);
    const int gamma = static_cast<int>(dp.sets.size());
    if (a.sigma * gamma > kMaxSlots) throw InputError("sigma * sets exceeds " + std::to_string(kMaxSlots) + " slots");
    const KSigmaConfig cfg = config_from_domatic(g, dp, a.sigma);
    const ConfigCheck check = verify_config(g, cfg);
    if (!check.valid) throw std::logic_error("domatic construction produced an invalid configuration");
    doc << "# mode = disjoint\n";
    doc << "# sets = " << gamma << '\n';
    for (int i = 0; i < gamma; ++i) {
      doc << "# set " << (i + 1) << " =";
      for (std::size_t j = 0; j < dp.sets[i].size(); ++j) doc << (j ? "," : " ") << g.name(dp.sets[i][j]);
      doc << '\n';
    }
    doc << "# k = " << cfg.k << '\n';
    doc << config_document(g, cfg);
    out << doc.str();
    if (!a.out.empty()) write_file(a.out, doc.str());
    return kExitOk;
  }
  if (a.mode != "config") throw InputError("unknown mode '" + a.mode + "' (disjoint or config)");

  int k = a.k;
  if (k == 0) k = a.sigma * static_cast<int>(greedy_domatic_partition(g, seed).sets.size());
  if (k < a.sigma || k > kMaxSlots) {
    throw InputError("--k must lie in sigma.." + std::to_string(kMaxSlots));
  }
  SearchOptions opt;
  opt.budget = a.budget;
  opt.exhaustive_limit = a.exhaustive_limit;
  opt.seed = derive_seed(a.seed, "config-search");
  const SearchResult r = search_config(g, k, a.sigma, opt);
  doc << "# mode = config\n";
  doc << "# k = " << k << '\n';
  doc << "# sigma = " << a.sigma << '\n';
  doc << "# result = " << to_string(r.outcome) << '\n';
  doc << "# method = " << r.method << '\n';
  doc << "# iterations = " << r.iterations << '\n';
  if (r.config) {
    if (!verify_config(g, *r.config).valid) throw std::logic_error("search returned an invalid configuration");
    doc << config_document(g, *r.config);
  }
  out << doc.str();
  if (!a.out.empty()) write_file(a.out, doc.str());
  return r.outcome == SearchOutcome::not_found_within_budget ? kExitRefused : kExitOk;
}

struct RandArgs {
  std::string family = "er";
  int n = 100;
  double p = 0.05;
  double side = 10.0;
  double radius = 2.0;
  bool torus = false;
  std::string k_range = "1..10";
  int sigma = 1;
  int trials = 50;
  int graphs = 1;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_rand(const RandArgs& a, std::ostream& out) {
  const bool geometric = a.family == "geometric";
  if (!geometric && a.family != "er") throw InputError("unknown family '" + a.family + "' (geometric or er)");
  const auto [k_lo, k_hi] = parse_k_range(a.k_range);
  if (a.sigma < 1 || a.sigma > k_lo) throw InputError("--sigma must lie in 1..(start of --k-range)");
  if (a.trials < 1 || a.graphs < 1) throw InputError("--trials and --graphs must be positive");

  std::vector<NetworkGraph> graphs;
  const std::uint64_t graph_seed = derive_seed(a.seed, "rand-graph");
  for (int i = 0; i < a.graphs; ++i) {
    const std::uint64_t s = derive_seed(graph_seed, static_cast<std::uint64_t>(i));
    if (geometric) {
      GeometricGraphSpec spec{a.n, a.side, a.radius, a.torus, s};
      spec.validate();
      graphs.push_back(gen_geometric(spec).graph);
    } else {
      ErdosRenyiSpec spec{a.n, a.p, s};
      spec.validate();
      graphs.push_back(gen_erdos_renyi(spec));
    }
  }

  std::string csv = "k,sigma,closed_form,empirical_mean,stderr,trials\n";
  for (int k = k_lo; k <= k_hi; ++k) {
    const double closed = geometric ? closed_form_geometric(k, a.sigma, a.n / (a.side * a.side), a.radius)
                                    : closed_form_er(k, a.sigma, a.n, a.p);
    const std::uint64_t sched_seed = derive_seed(derive_seed(a.seed, "rand-schedule"), static_cast<std::uint64_t>(k));
    std::vector<double> samples;
    for (int i = 0; i < a.graphs; ++i) {
      auto stats = simulate_random_schedule(graphs[i], k, a.sigma, 1, a.trials,
                                            derive_seed(sched_seed, static_cast<std::uint64_t>(i)));
      samples.insert(samples.end(), stats.samples.begin(), stats.samples.end());
    }
    double sum = 0.0;
    for (double v : samples) sum += v;
    const double mean = sum / static_cast<double>(samples.size());
    double ss = 0.0;
    for (double v : samples) ss += (v - mean) * (v - mean);
    const double se = samples.size() > 1
                          ? std::sqrt(ss / static_cast<double>(samples.size() - 1) / static_cast<double>(samples.size()))
                          : 0.0;
    csv += std::to_string(k) + ',' + std::to_string(a.sigma) + ',' + format_number(closed) + ',' +
           format_number(mean) + ',' + format_number(se) + ',' + std::to_string(samples.size()) + '\n';
  }
  emit(out, a.out, csv);
  return kExitOk;
}

struct VerifyArgs {
  bool potential = false;
  bool reduction = false;
  bool proposition1 = false;
  std::uint64_t seed = 0;
};

int cmd_verify(VerifyArgs a, std::ostream& out) {
  if (!a.potential && !a.reduction && !a.proposition1) a.potential = a.reduction = a.proposition1 = true;
  std::vector<SuiteResult> results;
  if (a.potential) results.push_back(potential_game_suite(a.seed, 40, 50));
  if (a.proposition1) results.push_back(proposition1_suite(a.seed, 20, 20));
  if (a.reduction) results.push_back(reduction_suite(a.seed, 50, 12, 8));
  bool ok = true;
  for (const auto& r : results) {
    out << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (instances=" << r.instances
        << ", checks=" << r.checks << ", failures=" << r.failures << ")\n";
    for (const auto& d : r.failure_details) out << "  " << d << '\n';
    ok = ok && r.passed();
  }
  return ok ? kExitOk : kExitVerification;
}

struct ConvertArgs {
  std::string input;
  std::string out;
  int lambda = 0;
  int k = 0;
  int sigma = 0;
};

void apply_params(InstanceFile& f, int lambda, int k, int sigma) {
  if (lambda > 0) f.lambda = lambda;
  if (k > 0) f.k = k;
  if (sigma > 0) f.sigma = sigma;
}

int cmd_convert(const ConvertArgs& a, std::ostream& out) {
  InstanceFile f = instance_from_edge_list(read_file(a.input), a.input);
  apply_params(f, a.lambda, a.k, a.sigma);
  emit(out, a.out, format_instance(f));
  return kExitOk;
}

struct GenerateArgs {
  std::string family = "geometric";
  int n = 50;
  double p = 0.1;
  double side = 10.0;
  double radius = 2.0;
  bool torus = false;
  int m = 0;
  std::uint64_t seed = 0;
  std::string targets = "all-nodes";
  std::string out;
  int lambda = 0;
  int k = 0;
  int sigma = 0;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  InstanceFile f;
  const std::uint64_t s = derive_seed(a.seed, "generate");
  if (a.family == "geometric") {
    GeometricGraphSpec spec{a.n, a.side, a.radius, a.torus, s};
    spec.validate();
    f.graph = gen_geometric(spec).graph;
  } else if (a.family == "er") {
    ErdosRenyiSpec spec{a.n, a.p, s};
    spec.validate();
    f.graph = gen_erdos_renyi(spec);
  } else if (a.family == "network") {
    f.graph = gen_network_standin(a.n, a.m, s);
  } else {
    throw InputError("unknown family '" + a.family + "' (geometric, er or network)");
  }
  if (a.targets == "all-edges") {
    f.target_mode = InstanceFile::TargetMode::all_edges;
  } else if (a.targets != "all-nodes") {
    throw InputError("--targets must be all-nodes or all-edges");
  }
  apply_params(f, a.lambda, a.k, a.sigma);
  emit(out, a.out, format_instance(f));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Activation scheduling for battery-bounded monitoring devices", "monsched"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads (0 keeps the runtime default)")->check(CLI::NonNegativeNumber);

  std::function<int()> action;

  BuildCoverageArgs bc;
  auto* sub = app.add_subcommand("build-coverage", "Build the bipartite coverage graph");
  sub->add_option("instance", bc.instance)->required();
  sub->add_option("--out", bc.out, "Write the adjacency here instead of stdout");
  sub->callback([&] { action = [&] { return cmd_build_coverage(bc, out, err); }; });

  ScheduleArgs sa;
  sub = app.add_subcommand("schedule", "Compute an activation schedule");
  sub->add_option("instance", sa.instance)->required();
  sub->add_option("--solver", sa.solver)->check(CLI::IsMember({"greedy", "blll", "oracle"}));
  sub->add_option("--seed", sa.seed);
  sub->add_option("--iters", sa.iters)->check(CLI::PositiveNumber);
  sub->add_option("--epsilon", sa.epsilon);
  sub->add_flag("--printed-acceptance", sa.printed, "Use b = epsilon in the acceptance rule");
  sub->add_flag("--random-ties", sa.random_ties, "Greedy: break ties at random from --seed");
  sub->add_option("--oracle-limit", sa.oracle_limit);
  sub->add_option("--trace", sa.trace, "CSV trace file");
  sub->add_option("--out", sa.out, "Labeling file");
  sub->callback([&] { action = [&] { return cmd_schedule(sa, out); }; });

  ScoreArgs sc;
  sub = app.add_subcommand("score", "Validate and score a labeling file");
  sub->add_option("instance", sc.instance)->required();
  sub->add_option("--labeling", sc.labeling)->required();
  sub->callback([&] { action = [&] { return cmd_score(sc, out); }; });

  PlaceArgs pa;
  sub = app.add_subcommand("place-and-schedule", "Choose device sites and a schedule");
  sub->add_option("instance", pa.instance)->required();
  sub->add_option("--devices", pa.devices)->required();
  sub->add_option("--sites", pa.sites, "'all' or comma-separated sensor names");
  sub->add_option("--solver", pa.solver)->check(CLI::IsMember({"blll-joint", "two-stage", "both"}));
  sub->add_option("--seed", pa.seed);
  sub->add_option("--iters", pa.iters)->check(CLI::PositiveNumber);
  sub->add_option("--epsilon", pa.epsilon);
  sub->add_option("--k-range", pa.k_range, "Sweep k (a..b) and emit k,D_joint,D_twostage");
  sub->add_option("--csv", pa.csv);
  sub->add_option("--out", pa.out);
  sub->callback([&] { action = [&] { return cmd_place(pa, out); }; });

  LifetimeArgs la;
  sub = app.add_subcommand("lifetime", "Full-coverage lifetime from dominating sets");
  sub->add_option("instance", la.instance)->required();
  sub->add_option("--sigma", la.sigma)->required();
  sub->add_option("--mode", la.mode)->check(CLI::IsMember({"disjoint", "config"}));
  sub->add_option("--k", la.k);
  sub->add_option("--budget", la.budget);
  sub->add_option("--exhaustive-limit", la.exhaustive_limit);
  auto* seed_opt = sub->add_option("--seed", la.seed);
  sub->add_option("--out", la.out);
  sub->callback([&, seed_opt] {
    la.seeded = seed_opt->count() > 0;
    action = [&] { return cmd_lifetime(la, out); };
  });

  RandArgs ra;
  sub = app.add_subcommand("rand-experiment", "Random scheduling versus the closed form");
  sub->add_option("--family", ra.family)->required()->check(CLI::IsMember({"geometric", "er"}));
  sub->add_option("--n", ra.n);
  sub->add_option("--p", ra.p);
  sub->add_option("--side", ra.side);
  sub->add_option("--radius", ra.radius);
  sub->add_flag("--torus", ra.torus);
  sub->add_option("--k-range", ra.k_range);
  sub->add_option("--sigma", ra.sigma);
  sub->add_option("--trials", ra.trials, "Schedules per graph");
  sub->add_option("--graphs", ra.graphs, "Random graphs per k");
  sub->add_option("--seed", ra.seed);
  sub->add_option("--out", ra.out);
  sub->callback([&] { action = [&] { return cmd_rand(ra, out); }; });

  VerifyArgs va;
  bool all = false;
  sub = app.add_subcommand("verify", "Randomised property suites");
  sub->add_flag("--all", all);
  sub->add_flag("--potential-game", va.potential);
  sub->add_flag("--reduction", va.reduction);
  sub->add_flag("--proposition1", va.proposition1);
  sub->add_option("--seed", va.seed);
  sub->callback([&] { action = [&] { return cmd_verify(va, out); }; });

  ConvertArgs ca;
  sub = app.add_subcommand("convert-edgelist", "Turn a 'u v' edge list into an instance file");
  sub->add_option("input", ca.input)->required();
  sub->add_option("--out", ca.out);
  sub->add_option("--lambda", ca.lambda);
  sub->add_option("--k", ca.k);
  sub->add_option("--sigma", ca.sigma);
  sub->callback([&] { action = [&] { return cmd_convert(ca, out); }; });

  GenerateArgs ga;
  sub = app.add_subcommand("generate", "Write a random network as an instance file");
  sub->add_option("--family", ga.family)->check(CLI::IsMember({"geometric", "er", "network"}));
  sub->add_option("--n", ga.n);
  sub->add_option("--p", ga.p);
  sub->add_option("--side", ga.side);
  sub->add_option("--radius", ga.radius);
  sub->add_flag("--torus", ga.torus);
  sub->add_option("--m", ga.m, "Edge count for the network family");
  sub->add_option("--seed", ga.seed);
  sub->add_option("--targets", ga.targets);
  sub->add_option("--lambda", ga.lambda);
  sub->add_option("--k", ga.k);
  sub->add_option("--sigma", ga.sigma);
  sub->add_option("--out", ga.out);
  sub->callback([&] { action = [&] { return cmd_generate(ga, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (threads > 0) set_thread_count(threads);
    return action();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerification;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceRefusal& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace monsched
