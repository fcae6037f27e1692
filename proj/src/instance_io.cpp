#include "monsched/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "monsched/errors.hpp"

namespace monsched {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

struct Line {
  int number;
  std::string_view text;  // comment stripped, trimmed, non-empty
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) out.push_back({number, raw});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

[[noreturn]] void fail(std::string_view source, int line, const std::string& message) {
  throw InputError(std::string(source) + ":" + std::to_string(line) + ": " + message);
}

void check_name(std::string_view source, int line, std::string_view name) {
  if (name.find_first_of(":,|#") != std::string_view::npos) {
    fail(source, line, "invalid node name '" + std::string(name) + "' (':', ',', '|', '#' not allowed)");
  }
}

int parse_int(std::string_view source, int line, std::string_view key, std::string_view value) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    fail(source, line, "'" + std::string(key) + "' expects an integer, got '" + std::string(value) + "'");
  }
  return out;
}

NodeId resolve(const NetworkGraph& g, std::string_view source, int line, std::string_view name) {
  auto id = g.find_node(name);
  if (!id) fail(source, line, "unknown node '" + std::string(name) + "'");
  return *id;
}

}  // namespace

InstanceFile parse_instance(std::string_view text, std::string_view source) {
  std::map<std::string, std::vector<Line>, std::less<>> sections;
  std::string current;
  for (const Line& line : content_lines(text)) {
    if (line.text.front() == '[') {
      if (line.text.back() != ']') fail(source, line.number, "unterminated section header");
      current = std::string(trim(line.text.substr(1, line.text.size() - 2)));
      static const char* known[] = {"nodes", "edges", "sensors", "targets", "params"};
      if (std::find(std::begin(known), std::end(known), current) == std::end(known)) {
        fail(source, line.number, "unknown section '[" + current + "]'");
      }
      sections[current];
      continue;
    }
    if (current.empty()) fail(source, line.number, "content before the first section header");
    sections[current].push_back(line);
  }

  InstanceFile inst;
  GraphBuilder builder;
  const bool declared = sections.contains("nodes");
  for (const Line& line : sections["nodes"]) {
    for (auto tok : tokens(line.text)) {
      check_name(source, line.number, tok);
      if (builder.find_node(tok)) fail(source, line.number, "duplicate node '" + std::string(tok) + "'");
      builder.add_node(std::string(tok));
    }
  }
  for (const Line& line : sections["edges"]) {
    const auto t = tokens(line.text);
    if (t.size() != 2) fail(source, line.number, "edge needs exactly two node names");
    for (auto name : t) {
      check_name(source, line.number, name);
      if (declared) {
        if (!builder.find_node(name)) fail(source, line.number, "unknown node '" + std::string(name) + "'");
      } else {
        builder.add_node(std::string(name));
      }
    }
    try {
      builder.add_edge(t[0], t[1]);
    } catch (const InputError& e) {
      fail(source, line.number, e.what());
    }
  }
  inst.graph = std::move(builder).build();
  const NetworkGraph& g = inst.graph;

  if (auto it = sections.find("sensors"); it != sections.end()) {
    std::vector<NodeId> sensors;
    bool all = false;
    for (const Line& line : it->second) {
      for (auto tok : tokens(line.text)) {
        if (tok == "all") {
          all = true;
        } else {
          sensors.push_back(resolve(g, source, line.number, tok));
        }
      }
    }
    if (all && !sensors.empty()) fail(source, it->second.front().number, "'all' mixed with sensor names");
    if (!all) inst.sensors = std::move(sensors);
  }

  if (auto it = sections.find("targets"); it != sections.end()) {
    bool all_nodes = false;
    bool all_edges = false;
    std::vector<Target> listed;
    for (const Line& line : it->second) {
      const auto t = tokens(line.text);
      if (t.size() == 1 && t[0] == "all-nodes") {
        all_nodes = true;
      } else if (t.size() == 1 && t[0] == "all-edges") {
        all_edges = true;
      } else if (t.size() == 1) {
        listed.push_back(Target::node(resolve(g, source, line.number, t[0])));
      } else if (t.size() == 2) {
        const NodeId a = resolve(g, source, line.number, t[0]);
        const NodeId b = resolve(g, source, line.number, t[1]);
        auto e = g.find_edge(a, b);
        if (!e) fail(source, line.number, "no edge '" + std::string(t[0]) + " " + std::string(t[1]) + "'");
        listed.push_back(Target::edge(*e));
      } else {
        fail(source, line.number, "target line needs one node name or two endpoint names");
      }
    }
    if (all_nodes && !all_edges && listed.empty()) {
      inst.target_mode = InstanceFile::TargetMode::all_nodes;
    } else if (all_edges && !all_nodes && listed.empty()) {
      inst.target_mode = InstanceFile::TargetMode::all_edges;
    } else {
      std::vector<Target> merged;
      if (all_nodes) merged = g.all_node_targets();
      if (all_edges) {
        const auto edges = g.all_edge_targets();
        merged.insert(merged.end(), edges.begin(), edges.end());
      }
      merged.insert(merged.end(), listed.begin(), listed.end());
      inst.target_mode = InstanceFile::TargetMode::listed;
      inst.targets = std::move(merged);
    }
  }

  for (const Line& line : sections["params"]) {
    const auto sep = line.text.find_first_of("=:");
    if (sep == std::string_view::npos) fail(source, line.number, "expected 'key = value'");
    const auto key = trim(line.text.substr(0, sep));
    const auto value = trim(line.text.substr(sep + 1));
    if (key == "lambda") {
      inst.lambda = parse_int(source, line.number, key, value);
    } else if (key == "k") {
      inst.k = parse_int(source, line.number, key, value);
    } else if (key == "sigma") {
      inst.sigma = parse_int(source, line.number, key, value);
    } else if (key == "objective") {
      try {
        inst.objective = parse_objective(value);
      } catch (const InputError& e) {
        fail(source, line.number, e.what());
      }
    } else {
      fail(source, line.number, "unknown parameter '" + std::string(key) + "'");
    }
  }
  return inst;
}

std::vector<NodeId> InstanceFile::sensor_nodes() const {
  if (sensors) return *sensors;
  std::vector<NodeId> all(static_cast<std::size_t>(graph.node_count()));
  for (NodeId v = 0; v < graph.node_count(); ++v) all[v] = v;
  return all;
}

std::vector<Target> InstanceFile::target_list() const {
  switch (target_mode) {
    case TargetMode::all_nodes: return graph.all_node_targets();
    case TargetMode::all_edges: return graph.all_edge_targets();
    case TargetMode::listed: return targets;
  }
  return {};
}

ProblemInstance InstanceFile::problem_with_sensors(std::span<const NodeId> sensor_set,
                                                   Exec exec) const {
  if (!lambda) throw InputError("instance is missing 'lambda'");
  if (!k) throw InputError("instance is missing 'k'");
  if (!sigma) throw InputError("instance is missing 'sigma'");
  if (*lambda < 0) throw InputError("lambda must be non-negative");
  const auto t = target_list();
  return ProblemInstance(build_coverage(objective, graph, sensor_set, t, *lambda, exec), *k, *sigma);
}

ProblemInstance InstanceFile::problem(Exec exec) const {
  const auto s = sensor_nodes();
  return problem_with_sensors(s, exec);
}

std::string format_instance(const InstanceFile& inst) {
  const NetworkGraph& g = inst.graph;
  std::ostringstream out;
  out << "[nodes]\n";
  for (NodeId v = 0; v < g.node_count(); ++v) out << g.name(v) << '\n';
  out << "[edges]\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    out << g.name(a) << ' ' << g.name(b) << '\n';
  }
  out << "[sensors]\n";
  if (!inst.sensors) {
    out << "all\n";
  } else {
    for (NodeId v : *inst.sensors) out << g.name(v) << '\n';
  }
  out << "[targets]\n";
  switch (inst.target_mode) {
    case InstanceFile::TargetMode::all_nodes: out << "all-nodes\n"; break;
    case InstanceFile::TargetMode::all_edges: out << "all-edges\n"; break;
    case InstanceFile::TargetMode::listed:
      for (const Target& t : inst.targets) {
        if (t.kind == Target::Kind::node) {
          out << g.name(t.id) << '\n';
        } else {
          const auto [a, b] = g.endpoints(t.id);
          out << g.name(a) << ' ' << g.name(b) << '\n';
        }
      }
      break;
  }
  out << "[params]\n";
  if (inst.lambda) out << "lambda = " << *inst.lambda << '\n';
  if (inst.k) out << "k = " << *inst.k << '\n';
  if (inst.sigma) out << "sigma = " << *inst.sigma << '\n';
  out << "objective = " << to_string(inst.objective) << '\n';
  return out.str();
}

InstanceFile instance_from_edge_list(std::string_view text, std::string_view source) {
  GraphBuilder b;
  for (const Line& line : content_lines(text)) {
    const auto t = tokens(line.text);
    if (t.size() != 2) fail(source, line.number, "expected 'u v'");
    if (t[0] == t[1]) fail(source, line.number, "self-loop on '" + std::string(t[0]) + "'");
    for (auto name : t) {
      check_name(source, line.number, name);
      b.add_node(std::string(name));
    }
    const NodeId u = *b.find_node(t[0]);
    const NodeId v = *b.find_node(t[1]);
    if (!b.has_edge(u, v)) b.add_edge(u, v);  // repeated pipes collapse
  }
  InstanceFile inst;
  inst.graph = std::move(b).build();
  return inst;
}

std::string format_labeling(const CoverageGraph& coverage, const Labeling& labeling,
                            bool include_empty) {
  std::string out;
  for (int x = 0; x < labeling.size(); ++x) {
    const auto labels = labeling.labels(x);
    if (labels.empty() && !include_empty) continue;
    out += coverage.x_name(x);
    out += ':';
    for (std::size_t i = 0; i < labels.size(); ++i) {
      out += i == 0 ? " " : ",";
      out += std::to_string(labels[i]);
    }
    out += '\n';
  }
  return out;
}

Labeling parse_labeling(std::string_view text, const CoverageGraph& coverage, int k) {
  std::map<std::string, int, std::less<>> index;
  for (int x = 0; x < coverage.x_count(); ++x) index.emplace(coverage.x_name(x), x);
  Labeling l(coverage.x_count(), k);
  std::vector<char> seen(static_cast<std::size_t>(coverage.x_count()), 0);
  const std::string_view source = "<labeling>";
  for (const Line& line : content_lines(text)) {
    if (line.text == "[report]") break;
    const auto colon = line.text.find(':');
    if (colon == std::string_view::npos) fail(source, line.number, "expected 'name: slot,slot,...'");
    const auto name = trim(line.text.substr(0, colon));
    auto it = index.find(name);
    if (it == index.end()) fail(source, line.number, "unknown device '" + std::string(name) + "'");
    if (seen[it->second]) fail(source, line.number, "device '" + std::string(name) + "' listed twice");
    seen[it->second] = 1;
    std::string_view rest = trim(line.text.substr(colon + 1));
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = trim(rest.substr(0, comma));
      const int slot = parse_int(source, line.number, "slot", item);
      if (slot < 1 || slot > k) {
        fail(source, line.number, "slot " + std::to_string(slot) + " outside 1.." + std::to_string(k));
      }
      l.add_label(it->second, slot);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }
  return l;
}

std::string format_report(const ProblemInstance& inst, const ScheduleReport& report) {
  std::ostringstream out;
  out << "[report]\n";
  out << "objective = " << to_string(inst.objective()) << '\n';
  out << "k = " << inst.k << '\n';
  out << "sigma = " << inst.sigma << '\n';
  out << "devices = " << inst.coverage.x_count() << '\n';
  out << "y_count = " << inst.coverage.y_count() << '\n';
  out << "per_slot_covered = ";
  for (std::size_t j = 0; j < report.per_slot_covered.size(); ++j) {
    out << (j ? "," : "") << report.per_slot_covered[j];
  }
  out << '\n';
  out << "potential = " << report.potential << '\n';
  out << "score = " << report.score.str_with_decimal() << '\n';
  return out.str();
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

InstanceFile load_instance(const std::string& path) { return parse_instance(read_file(path), path); }

}  // namespace monsched
