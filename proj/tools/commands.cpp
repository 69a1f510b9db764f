#include "commands.hpp"

#include <random>

#include "gbs/branching.hpp"
#include "gbs/error.hpp"
#include "gbs/faithfulness.hpp"
#include "gbs/graph.hpp"
#include "gbs/io.hpp"
#include "gbs/leavitt.hpp"
#include "gbs/representation.hpp"

namespace gbs::cli {

using nlohmann::json;

namespace {

io::Style style_of(const RunConfig& rc) { return io::Style{rc.pretty}; }

std::shared_ptr<const DirectedGraph> load_graph(const RunConfig& rc) {
  if (rc.graph.empty()) throw Error(ErrorKind::InvalidArgument, "--graph is required");
  return std::make_shared<const DirectedGraph>(io::parse_graph(io::read_file(rc.graph)));
}

std::optional<io::ThetaConfig> load_config(const RunConfig& rc) {
  if (rc.config.empty()) return std::nullopt;
  return io::parse_theta_config(io::read_file(rc.config));
}

BranchingSystem system_for(const std::shared_ptr<const DirectedGraph>& g, const std::optional<io::ThetaConfig>& config) {
  if (!config) return build_affine_system(g);
  return build_rotation_system(g, io::resolve_thetas(*g, *config));
}

/// Rotation system for the faithfulness check; W = ∅ needs no angles.
BranchingSystem rotation_system_for(const std::shared_ptr<const DirectedGraph>& g,
                                    const std::optional<io::ThetaConfig>& config) {
  return build_rotation_system(g, config ? io::resolve_thetas(*g, *config) : std::map<EdgeId, QuadScalar>{});
}

json verification_report(const BranchingSystem& bs, Mode mode, io::Style style) {
  const AxiomReport axioms = verify_axioms(bs);
  const RelationReport relations = verify_ck_relations(bs, mode);
  return {{"passed", axioms.ok() && relations.ok()},
          {"axioms", io::axiom_report_to_json(bs, axioms, style)},
          {"relations", io::relation_report_to_json(relations, style)}};
}

json path_names(const DirectedGraph& g, const Path& p) {
  json out = json::array();
  for (EdgeId e : p.edges()) out.push_back(g.edge_name(e));
  return out;
}

/// chi of a random rational subinterval of some D_v, scaled by a small integer.
StepFunction random_step_function(const BranchingSystem& bs, std::mt19937_64& rng) {
  const DirectedGraph& g = bs.graph();
  std::uniform_int_distribution<std::size_t> pick_vertex(0, g.num_vertices() - 1);
  std::uniform_int_distribution<long> grid(0, 16);
  std::uniform_int_distribution<long> coeff(1, 5);
  const auto& pieces = bs.domain_set(VertexId{pick_vertex(rng)}).pieces();
  std::uniform_int_distribution<std::size_t> pick_piece(0, pieces.size() - 1);
  const Interval& d = pieces[pick_piece(rng)];
  long a = grid(rng), b = grid(rng);
  if (a > b) std::swap(a, b);
  if (a == b) {
    if (b < 16) ++b; else --a;
  }
  const QuadScalar lo = d.lo + d.length() * QuadScalar(Rational(a, 16));
  const QuadScalar hi = d.lo + d.length() * QuadScalar(Rational(b, 16));
  return RadCoeff(coeff(rng)) * StepFunction::indicator(Interval{lo, hi});
}

/// Applies the relations to random step functions; complements the
/// structural operator checks of verify_ck_relations.
json spot_checks(const BranchingSystem& bs, Mode mode, const RunConfig& rc) {
  const DirectedGraph& g = bs.graph();
  std::mt19937_64 rng(rc.seed);
  std::uniform_int_distribution<std::size_t> pick_edge(0, g.num_edges() - 1);
  std::size_t failed = 0;
  for (unsigned i = 0; i < rc.spot_checks; ++i) {
    const StepFunction phi = random_step_function(bs, rng);
    const EdgeId e{pick_edge(rng)};
    const StepFunction once = op_edge_adjoint(bs, e, mode).apply(op_edge(bs, e, mode).apply(phi));
    if (!(once == op_vertex(bs, g.range(e)).apply(phi))) ++failed;
    const VertexId v = g.source(e);
    StepFunction sum;
    for (EdgeId f : g.out_edges(v)) sum = sum + op_edge(bs, f, mode).apply(op_edge_adjoint(bs, f, mode).apply(phi));
    if (!(sum == op_vertex(bs, v).apply(phi))) ++failed;
  }
  return {{"seed", rc.seed}, {"samples", rc.spot_checks}, {"failed", failed}, {"passed", failed == 0}};
}

std::shared_ptr<const DirectedGraph> single_loop() {
  return std::make_shared<const DirectedGraph>(std::vector<std::string>{"v"},
                                               std::vector<EdgeRecord>{{"e", "v", "v"}});
}

json converse_cstar_json(const ConverseReport& r, io::Style style) {
  const DirectedGraph& g = r.system.graph();
  json nonzero = json::object();
  for (VertexId v : g.vertex_ids()) nonzero[g.vertex_name(v)] = r.vertex_nonzero[v.index];
  return {{"cycle", path_names(g, r.cycle)},
          {"system", io::system_to_json(r.system, style)},
          {"element", r.element.to_string()},
          {"element_in_kernel", r.element_in_kernel},
          {"vertex_nonzero", std::move(nonzero)},
          {"axioms", io::axiom_report_to_json(r.system, r.axioms, style)},
          {"relations", io::relation_report_to_json(r.relations, style)}};
}

bool converse_cstar_ok(const ConverseReport& r) {
  return r.axioms.ok() && r.relations.ok() && r.element_in_kernel && r.all_vertices_nonzero();
}

json converse_leavitt_json(const ConverseLeavittReport& r, io::Style style) {
  json out = converse_cstar_json(r.affine, style);
  json perturbed{{"system", io::system_to_json(r.perturbed, style)},
                 {"axioms", io::axiom_report_to_json(r.perturbed, r.perturbed_axioms, style)},
                 {"relations", io::relation_report_to_json(r.perturbed_relations, style)},
                 {"element_in_kernel", r.perturbed_check.in_kernel}};
  if (r.perturbed_check.witness) {
    perturbed["witness"] = io::step_function_to_json(*r.perturbed_check.witness, style);
    perturbed["witness_image"] = io::step_function_to_json(r.witness_image, style);
  }
  out["perturbed"] = std::move(perturbed);
  return out;
}

bool converse_leavitt_ok(const ConverseLeavittReport& r) {
  return converse_cstar_ok(r.affine) && r.perturbed_axioms.ok() && r.perturbed_relations.ok() &&
         !r.perturbed_check.in_kernel && r.perturbed_check.witness && !r.witness_image.is_zero();
}

/// A successful converse construction is a non-faithfulness witness; it
/// reports success with the expected_nonfaithful flag.
CommandResult converse_result(json report, bool ok) {
  report["expected_nonfaithful"] = ok;
  report["passed"] = ok;
  return {std::move(report), ok ? kPass : kVerificationFailed};
}

}  // namespace

CommandResult cmd_analyze(const RunConfig& rc) {
  const auto g = load_graph(rc);
  auto names = [&](const std::vector<VertexId>& vs) {
    json out = json::array();
    for (VertexId v : vs) out.push_back(g->vertex_name(v));
    return out;
  };
  json cycles = json::array();
  for (const auto& c : enumerate_simple_cycles(*g)) {
    cycles.push_back({{"base", g->vertex_name(c.base)}, {"edges", path_names(*g, c.path)}, {"has_exit", c.has_exit}});
  }
  return {{{"vertices", g->num_vertices()},
           {"edges", g->num_edges()},
           {"sinks", names(sinks(*g))},
           {"sources", names(sources(*g))},
           {"simple_cycles", std::move(cycles)},
           {"condition_L", condition_L(*g)},
           {"W", names(exitless_base_points(*g))}},
          kPass};
}

CommandResult cmd_build(const RunConfig& rc) {
  const auto g = load_graph(rc);
  return {io::system_to_json(system_for(g, load_config(rc)), style_of(rc)), kPass};
}

CommandResult cmd_verify(const RunConfig& rc) {
  const Mode mode = parse_mode(rc.mode);
  std::optional<BranchingSystem> bs;
  if (!rc.system.empty()) {
    bs = io::system_from_json(io::parse_json(io::read_file(rc.system), "system"));
  } else {
    bs = system_for(load_graph(rc), load_config(rc));
  }
  json report = verification_report(*bs, mode, style_of(rc));
  const bool passed = report["passed"].get<bool>();
  return {std::move(report), passed ? kPass : kVerificationFailed};
}

CommandResult cmd_faithful(const RunConfig& rc) {
  const auto g = load_graph(rc);
  const BranchingSystem bs = rotation_system_for(g, load_config(rc));
  const FaithfulnessVerdict verdict = faithfulness_check(bs, rc.max_power);
  json report = io::verdict_to_json(bs, verdict, style_of(rc));
  for (std::size_t i = 0; i < verdict.base_points.size(); ++i) {
    const auto& b = verdict.base_points[i];
    if (b.denominator) {
      report["W"][i]["f_alpha_q_is_identity"] = compose_path_map(bs, b.cycle.power(*b.denominator)).is_identity();
    }
  }
  return {std::move(report), verdict.criterion_satisfied() ? kPass : kNonFaithful};
}

CommandResult cmd_converse(const RunConfig& rc) {
  const auto g = load_graph(rc);
  if (rc.variant == "cstar") {
    const ConverseReport r = converse_ckut_cstar(*g);
    json report = converse_cstar_json(r, style_of(rc));
    report["variant"] = "cstar";
    return converse_result(std::move(report), converse_cstar_ok(r));
  }
  if (rc.variant == "leavitt") {
    const ConverseLeavittReport r = converse_ckut_leavitt(*g);
    json report = converse_leavitt_json(r, style_of(rc));
    report["variant"] = "leavitt";
    return converse_result(std::move(report), converse_leavitt_ok(r));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown variant '" + rc.variant + "' (expected cstar or leavitt)");
}

CommandResult cmd_reproduce(const RunConfig& rc, std::string_view scenario) {
  const io::Style style = style_of(rc);
  if (scenario == "example-irrational-loop") {
    const auto g = single_loop();
    const QuadScalar theta = QuadScalar(Rational(-1), Rational(1), 2);
    const BranchingSystem bs = build_rotation_system(g, {{g->edge("e"), theta}});
    const json cstar = verification_report(bs, Mode::cstar, style);
    const json algebraic = verification_report(bs, Mode::algebraic, style);
    const FaithfulnessVerdict verdict = faithfulness_check(bs, rc.max_power);
    const json spots = spot_checks(bs, Mode::cstar, rc);
    const bool relations_ok = cstar["passed"].get<bool>() && algebraic["passed"].get<bool>() &&
                              spots["passed"].get<bool>();
    json report{{"scenario", scenario},
                {"d", 2},
                {"theta", io::scalar_to_json(theta, style)},
                {"system", io::system_to_json(bs, style)},
                {"cstar", cstar},
                {"algebraic", algebraic},
                {"spot_checks", spots},
                {"verdict", io::verdict_to_json(bs, verdict, style)}};
    const bool faithful = verdict.criterion_satisfied();
    report["passed"] = relations_ok && faithful;
    return {std::move(report), !relations_ok ? kVerificationFailed : faithful ? kPass : kNonFaithful};
  }
  if (scenario == "converse-cstar") {
    const ConverseReport r = converse_ckut_cstar(*single_loop());
    json report = converse_cstar_json(r, style);
    report["scenario"] = scenario;
    report["spot_checks"] = spot_checks(r.system, Mode::cstar, rc);
    const bool ok = converse_cstar_ok(r) && report["spot_checks"]["passed"].get<bool>();
    return converse_result(std::move(report), ok);
  }
  if (scenario == "converse-leavitt") {
    const ConverseLeavittReport r = converse_ckut_leavitt(*single_loop());
    json report = converse_leavitt_json(r, style);
    report["scenario"] = scenario;
    report["spot_checks"] = spot_checks(r.perturbed, Mode::algebraic, rc);
    const bool ok = converse_leavitt_ok(r) && report["spot_checks"]["passed"].get<bool>();
    return converse_result(std::move(report), ok);
  }
  throw Error(ErrorKind::InvalidArgument,
              "unknown scenario '" + std::string(scenario) +
                  "' (expected example-irrational-loop, converse-cstar or converse-leavitt)");
}

CommandResult run(std::string_view command, const RunConfig& rc, std::string_view scenario) {
  try {
    if (command == "analyze") return cmd_analyze(rc);
    if (command == "build") return cmd_build(rc);
    if (command == "verify") return cmd_verify(rc);
    if (command == "faithful") return cmd_faithful(rc);
    if (command == "converse") return cmd_converse(rc);
    if (command == "reproduce") return cmd_reproduce(rc, scenario);
    throw Error(ErrorKind::InvalidArgument, "unknown command '" + std::string(command) + "'");
  } catch (const Error& e) {
    return {io::error_to_json(e.kind(), e.what()), kError};
  }
}

std::string render(const CommandResult& result, bool pretty) {
  return pretty ? result.report.dump(2) : result.report.dump();
}

}  // namespace gbs::cli
