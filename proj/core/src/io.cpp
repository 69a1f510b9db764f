#include "gbs/io.hpp"

#include <fstream>
#include <sstream>

#include "gbs/error.hpp"

namespace gbs::io {

namespace {

[[noreturn]] void field_error(std::string_view field, std::string_view what) {
  throw Error(ErrorKind::ParseError, std::string(field) + ": " + std::string(what));
}

const json& require(const json& j, const char* key, std::string_view where) {
  if (!j.is_object()) field_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(std::string(where) + "." + key, "missing field");
  return *it;
}

std::string require_string(const json& j, std::string_view where) {
  if (!j.is_string()) field_error(where, "expected a string");
  return j.get<std::string>();
}

Rational rational_field(const json& j, std::string_view where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) field_error(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    field_error(where, e.what());
  }
}

std::int64_t field_parameter(const json& j, std::string_view where) {
  if (!j.is_number_integer()) field_error(where, "expected an integer");
  const auto d = j.get<std::int64_t>();
  if (d < 2 || !is_squarefree(d)) field_error(where, "d must be squarefree and >= 2");
  return d;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Convert the byte offset into a line and column.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError, std::string(what) + ": malformed JSON at line " +
                                           std::to_string(line) + ", column " + std::to_string(column));
  }
}

// Graph

DirectedGraph graph_from_json(const json& j) {
  const json& vs = require(j, "vertices", "graph");
  if (!vs.is_array()) field_error("graph.vertices", "expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    vertices.push_back(require_string(vs[i], "graph.vertices[" + std::to_string(i) + "]"));
  }
  std::vector<EdgeRecord> edges;
  if (auto it = j.find("edges"); it != j.end()) {
    if (!it->is_array()) field_error("graph.edges", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "graph.edges[" + std::to_string(i) + "]";
      const json& e = (*it)[i];
      edges.push_back({require_string(require(e, "id", where), where + ".id"),
                       require_string(require(e, "src", where), where + ".src"),
                       require_string(require(e, "dst", where), where + ".dst")});
    }
  }
  return DirectedGraph(std::move(vertices), std::move(edges));
}

json graph_to_json(const DirectedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edge_records()) edges.push_back({{"id", e.id}, {"src", e.source}, {"dst", e.range}});
  return {{"vertices", g.vertex_names()}, {"edges", std::move(edges)}};
}

DirectedGraph parse_graph(std::string_view text) { return graph_from_json(parse_json(text, "graph")); }

// Scalars

QuadScalar scalar_from_json(const json& j, std::int64_t d) {
  if (j.is_string() || j.is_number_integer()) return QuadScalar(rational_field(j, "scalar"));
  const Rational a = rational_field(require(j, "a", "scalar"), "scalar.a");
  Rational b = 0;
  if (auto it = j.find("b"); it != j.end()) b = rational_field(*it, "scalar.b");
  return QuadScalar(a, b, d);
}

json scalar_to_json(const QuadScalar& x, Style style) {
  json out{{"a", to_string(x.rational_part())}, {"b", to_string(x.radical_part())}};
  if (style.approx) out["approx"] = x.to_double();
  return out;
}

json interval_to_json(const Interval& i, Style style) {
  return {{"lo", scalar_to_json(i.lo, style)}, {"hi", scalar_to_json(i.hi, style)}};
}

Interval interval_from_json(const json& j, std::int64_t d) {
  return {scalar_from_json(require(j, "lo", "interval"), d), scalar_from_json(require(j, "hi", "interval"), d)};
}

json interval_set_to_json(const IntervalSet& s, Style style) {
  json out = json::array();
  for (const auto& p : s.pieces()) out.push_back(interval_to_json(p, style));
  return out;
}

json radical_to_json(const RadCoeff& c, Style style) {
  json out = json::object();
  for (const auto& [r, q] : c.terms()) out[r.get_str()] = to_string(q);
  if (style.approx) out["approx"] = c.to_double();
  return out;
}

json step_function_to_json(const StepFunction& f, Style style) {
  json out = json::array();
  for (const auto& p : f.pieces()) {
    json piece = interval_to_json(p.support, style);
    piece["value"] = radical_to_json(p.value, style);
    out.push_back(std::move(piece));
  }
  return out;
}

// Theta config

ThetaConfig theta_config_from_json(const json& j) {
  ThetaConfig config;
  if (!j.is_object()) field_error("config", "expected an object");
  if (auto it = j.find("d"); it != j.end()) config.d = field_parameter(*it, "config.d");
  if (auto it = j.find("theta"); it != j.end()) {
    if (!it->is_object()) field_error("config.theta", "expected an object keyed by edge id");
    for (const auto& [edge, value] : it->items()) {
      QuadScalar theta;
      try {
        theta = scalar_from_json(value, config.d);
      } catch (const Error& e) {
        field_error("config.theta." + edge, e.what());
      }
      config.theta.emplace(edge, theta.mod_one());
    }
  }
  return config;
}

ThetaConfig parse_theta_config(std::string_view text) {
  return theta_config_from_json(parse_json(text, "config"));
}

std::map<EdgeId, QuadScalar> resolve_thetas(const DirectedGraph& g, const ThetaConfig& config) {
  std::map<EdgeId, QuadScalar> out;
  for (const auto& [name, theta] : config.theta) out.emplace(g.edge(name), theta);
  return out;
}

// Branching systems

namespace {

std::int64_t system_field(const BranchingSystem& bs) {
  auto pick = [](const QuadScalar& x) { return x.field(); };
  for (const auto& [e, t] : bs.rotation_angles()) {
    if (auto d = pick(t)) return d;
  }
  for (const auto& e : bs.graph().edge_ids()) {
    for (const auto& b : bs.map(e).branches()) {
      if (auto d = pick(b.source.lo)) return d;
      if (auto d = pick(b.map.offset)) return d;
    }
  }
  return 2;
}

SystemKind parse_kind(const std::string& s) {
  if (s == "affine") return SystemKind::affine;
  if (s == "rotation") return SystemKind::rotation;
  if (s == "custom") return SystemKind::custom;
  field_error("system.kind", "unknown kind '" + s + "'");
}

IntervalSet interval_set_from_json(const json& j, std::int64_t d, std::string_view where) {
  if (!j.is_array()) field_error(where, "expected an array of intervals");
  std::vector<Interval> pieces;
  for (const auto& p : j) pieces.push_back(interval_from_json(p, d));
  return IntervalSet::from_pieces(std::move(pieces));
}

}  // namespace

json system_to_json(const BranchingSystem& bs, Style style) {
  const DirectedGraph& g = bs.graph();
  json ranges = json::array();
  json maps = json::array();
  for (EdgeId e : g.edge_ids()) {
    ranges.push_back({{"edge", g.edge_name(e)}, {"set", interval_set_to_json(bs.range_set(e), style)}});
    json branches = json::array();
    for (const auto& b : bs.map(e).branches()) {
      branches.push_back({{"lo", scalar_to_json(b.source.lo, style)},
                          {"hi", scalar_to_json(b.source.hi, style)},
                          {"slope", to_string(b.map.slope)},
                          {"offset", scalar_to_json(b.map.offset, style)}});
    }
    maps.push_back({{"edge", g.edge_name(e)}, {"branches", std::move(branches)}});
  }
  json domains = json::array();
  for (VertexId v : g.vertex_ids()) {
    domains.push_back({{"vertex", g.vertex_name(v)}, {"set", interval_set_to_json(bs.domain_set(v), style)}});
  }
  json theta = json::object();
  for (const auto& [e, t] : bs.rotation_angles()) theta[g.edge_name(e)] = scalar_to_json(t, style);
  return {{"format", "gbs-branching-system"},
          {"kind", std::string(to_string(bs.kind()))},
          {"d", system_field(bs)},
          {"graph", graph_to_json(g)},
          {"R", std::move(ranges)},
          {"D", std::move(domains)},
          {"f", std::move(maps)},
          {"theta", std::move(theta)},
          {"notes", bs.notes()}};
}

BranchingSystem system_from_json(const json& j) {
  auto graph = std::make_shared<const DirectedGraph>(graph_from_json(require(j, "graph", "system")));
  const std::int64_t d = field_parameter(require(j, "d", "system"), "system.d");
  const SystemKind kind = parse_kind(require_string(require(j, "kind", "system"), "system.kind"));

  Layout layout;
  layout.ranges.resize(graph->num_edges());
  layout.domains.resize(graph->num_vertices());
  std::vector<PiecewiseAffineMap> maps(graph->num_edges());

  const json& ranges = require(j, "R", "system");
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    const std::string where = "system.R[" + std::to_string(i) + "]";
    const EdgeId e = graph->edge(require_string(require(ranges[i], "edge", where), where + ".edge"));
    layout.ranges[e.index] = interval_set_from_json(require(ranges[i], "set", where), d, where + ".set");
  }
  const json& domains = require(j, "D", "system");
  for (std::size_t i = 0; i < domains.size(); ++i) {
    const std::string where = "system.D[" + std::to_string(i) + "]";
    const VertexId v = graph->vertex(require_string(require(domains[i], "vertex", where), where + ".vertex"));
    layout.domains[v.index] = interval_set_from_json(require(domains[i], "set", where), d, where + ".set");
  }
  const json& fs = require(j, "f", "system");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string where = "system.f[" + std::to_string(i) + "]";
    const EdgeId e = graph->edge(require_string(require(fs[i], "edge", where), where + ".edge"));
    std::vector<AffineBranch> branches;
    for (const auto& b : require(fs[i], "branches", where)) {
      const Interval source{scalar_from_json(require(b, "lo", where), d),
                            scalar_from_json(require(b, "hi", where), d)};
      const Rational slope = rational_field(require(b, "slope", where), where + ".slope");
      branches.push_back({source, Affine{slope, scalar_from_json(require(b, "offset", where), d)}});
    }
    maps[e.index] = PiecewiseAffineMap(std::move(branches));
  }
  std::map<EdgeId, QuadScalar> angles;
  if (auto it = j.find("theta"); it != j.end()) {
    for (const auto& [name, value] : it->items()) angles.emplace(graph->edge(name), scalar_from_json(value, d));
  }
  std::vector<std::string> notes;
  if (auto it = j.find("notes"); it != j.end()) notes = it->get<std::vector<std::string>>();
  return BranchingSystem(std::move(graph), std::move(layout), std::move(maps), kind, std::move(angles),
                         std::move(notes));
}

// Reports

json axiom_report_to_json(const BranchingSystem& bs, const AxiomReport& r, Style style) {
  (void)bs;
  json failures = json::array();
  for (const auto& f : r.failures) {
    json item{{"axiom", static_cast<int>(f.axiom)},
              {"name", std::string(to_string(f.axiom))},
              {"subject", f.subject},
              {"detail", f.detail}};
    if (f.witness) item["witness_point"] = scalar_to_json(*f.witness, style);
    failures.push_back(std::move(item));
  }
  return {{"passed", r.ok()}, {"checks", r.checks}, {"failures", std::move(failures)}};
}

json relation_report_to_json(const RelationReport& r, Style style) {
  json checks = json::array();
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    json item{{"relation", c.relation}, {"subject", c.subject}, {"passed", c.passed}};
    if (c.witness) item["witness"] = step_function_to_json(*c.witness, style);
    if (!c.passed) ++failed;
    checks.push_back(std::move(item));
  }
  return {{"mode", std::string(to_string(r.mode))},
          {"passed", r.ok()},
          {"total", r.checks.size()},
          {"failed", failed},
          {"checks", std::move(checks)}};
}

json verdict_to_json(const BranchingSystem& bs, const FaithfulnessVerdict& v, Style style) {
  const DirectedGraph& g = bs.graph();
  json records = json::array();
  for (const auto& b : v.base_points) {
    json item{{"w", g.vertex_name(b.base)},
              {"cycle", b.cycle.to_string(g)},
              {"theta_w", scalar_to_json(b.theta, style)},
              {"rational", b.rational}};
    if (b.separating) {
      item["F"] = interval_to_json(b.separating->set, style);
      item["powers"] = b.separating->powers;
    }
    if (b.denominator) item["q"] = *b.denominator;
    if (b.kernel_term) {
      item["kernel_term"] = b.kernel_term->to_string();
      item["kernel_confirmed"] = b.kernel_confirmed;
    }
    records.push_back(std::move(item));
  }
  return {{"criterion_satisfied", v.criterion_satisfied()},
          {"max_power", v.max_power},
          {"W", std::move(records)},
          {"notes", v.notes}};
}

json error_to_json(ErrorKind kind, std::string_view message) {
  return {{"error", {{"kind", std::string(to_string(kind))}, {"message", std::string(message)}}}};
}

}  // namespace gbs::io
