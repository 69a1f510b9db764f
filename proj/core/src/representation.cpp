#include "gbs/representation.hpp"

#include "gbs/error.hpp"

namespace gbs {

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::cstar ? "cstar" : "algebraic";
}

Mode parse_mode(std::string_view text) {
  if (text == "cstar") return Mode::cstar;
  if (text == "algebraic") return Mode::algebraic;
  throw Error(ErrorKind::ParseError, "mode must be 'cstar' or 'algebraic', got '" + std::string(text) + "'");
}

CanonicalOperator op_vertex(const BranchingSystem& bs, VertexId v) {
  if (!bs.graph().contains(v)) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  return CanonicalOperator::multiplication(bs.domain_set(v));
}

namespace {

/// Operator phi -> sum over branches b of m: weight(b) chi_{b(source)} phi ∘ b^{-1}.
CanonicalOperator push_forward(const PiecewiseAffineMap& m, Mode mode) {
  std::vector<OperatorTerm> terms;
  terms.reserve(m.branches().size());
  for (const auto& b : m.branches()) {
    const Affine back = b.map.inverse();
    // Phi_{m^-1} on the image is the slope of the inverse branch.
    RadCoeff w = mode == Mode::cstar ? RadCoeff::sqrt_of(back.slope) : RadCoeff(1);
    terms.push_back({b.image(), back, std::move(w)});
  }
  return CanonicalOperator::from_terms(terms);
}

}  // namespace

CanonicalOperator op_edge(const BranchingSystem& bs, EdgeId e, Mode mode) {
  if (!bs.graph().contains(e)) throw Error(ErrorKind::UnknownEdge, "edge index out of range");
  return push_forward(bs.map(e), mode);
}

CanonicalOperator op_edge_adjoint(const BranchingSystem& bs, EdgeId e, Mode mode) {
  if (!bs.graph().contains(e)) throw Error(ErrorKind::UnknownEdge, "edge index out of range");
  return push_forward(bs.inverse_map(e), mode);
}

CanonicalOperator op_path(const BranchingSystem& bs, const Path& p, Mode mode) {
  if (!bs.graph().is_path(p.edges())) throw Error(ErrorKind::NotAPath, "path not in graph");
  CanonicalOperator out = op_edge(bs, p.front(), mode);
  for (std::size_t i = 1; i < p.length(); ++i) out = out * op_edge(bs, p.edges()[i], mode);
  return out;
}

CanonicalOperator op_path_adjoint(const BranchingSystem& bs, const Path& p, Mode mode) {
  if (!bs.graph().is_path(p.edges())) throw Error(ErrorKind::NotAPath, "path not in graph");
  CanonicalOperator out = op_edge_adjoint(bs, p.back(), mode);
  for (std::size_t i = p.length() - 1; i-- > 0;) out = out * op_edge_adjoint(bs, p.edges()[i], mode);
  return out;
}

CanonicalOperator op_path_direct(const BranchingSystem& bs, const Path& p, Mode mode) {
  return push_forward(compose_path_map(bs, p), mode);
}

bool RelationReport::ok() const noexcept {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::vector<const RelationCheck*> RelationReport::failures() const {
  std::vector<const RelationCheck*> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(&c);
  }
  return out;
}

RelationReport verify_ck_relations(const BranchingSystem& bs, Mode mode) {
  const DirectedGraph& g = bs.graph();
  RelationReport report;
  report.mode = mode;

  auto check_equal = [&](std::string relation, std::string subject, const CanonicalOperator& lhs,
                         const CanonicalOperator& rhs) {
    RelationCheck c{std::move(relation), std::move(subject), true, std::nullopt};
    if (!(lhs == rhs)) {
      c.passed = false;
      c.witness = distinguishing_function(lhs - rhs);
    }
    report.checks.push_back(std::move(c));
  };

  const auto vertices = g.vertex_ids();
  const auto edges = g.edge_ids();
  std::vector<CanonicalOperator> p(vertices.size());
  for (VertexId v : vertices) p[v.index] = op_vertex(bs, v);
  std::vector<CanonicalOperator> s, s_adj, range_proj;
  for (EdgeId e : edges) {
    s.push_back(op_edge(bs, e, mode));
    s_adj.push_back(op_edge_adjoint(bs, e, mode));
    range_proj.push_back(s.back() * s_adj.back());
  }

  for (EdgeId e : edges) {
    const auto& name = g.edge_name(e);
    check_equal("s_e^* s_e = p_r(e)", name, s_adj[e.index] * s[e.index], p[g.range(e).index]);

    // s_e s_e^* <= p_{s(e)}: both sides are multiplications, so <= is inclusion of supports.
    RelationCheck c{"s_e s_e^* <= p_s(e)", name, true, std::nullopt};
    const auto& r = bs.range_set(e);
    const auto& d = bs.domain_set(g.source(e));
    if (!(range_proj[e.index] == CanonicalOperator::multiplication(r))) {
      c.passed = false;
      c.witness = distinguishing_function(range_proj[e.index] - CanonicalOperator::multiplication(r));
    } else if (!r.is_subset_of(d)) {
      c.passed = false;
      c.witness = StepFunction::indicator(r.subtract(d));
    }
    report.checks.push_back(std::move(c));
  }

  for (VertexId v : vertices) {
    const auto out = g.out_edges(v);
    if (out.empty()) continue;
    CanonicalOperator sum;
    for (EdgeId e : out) sum = sum + range_proj[e.index];
    check_equal("p_v = sum s_e s_e^*", g.vertex_name(v), p[v.index], sum);
  }

  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      check_equal("p_v p_w = 0", g.vertex_name(vertices[i]) + "," + g.vertex_name(vertices[j]),
                  p[i] * p[j], CanonicalOperator::zero());
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      check_equal("s_e s_e^* s_f s_f^* = 0", g.edge_name(edges[i]) + "," + g.edge_name(edges[j]),
                  range_proj[i] * range_proj[j], CanonicalOperator::zero());
    }
  }

  if (mode == Mode::algebraic) {
    for (EdgeId e : edges) {
      const auto& name = g.edge_name(e);
      const auto& src = p[g.source(e).index];
      const auto& rng = p[g.range(e).index];
      check_equal("s(e) e = e", name, src * s[e.index], s[e.index]);
      check_equal("e r(e) = e", name, s[e.index] * rng, s[e.index]);
      check_equal("r(e) e^* = e^*", name, rng * s_adj[e.index], s_adj[e.index]);
      check_equal("e^* s(e) = e^*", name, s_adj[e.index] * src, s_adj[e.index]);
      for (EdgeId f : edges) {
        if (f == e) continue;
        check_equal("e^* f = 0", name + "," + g.edge_name(f), s_adj[e.index] * s[f.index],
                    CanonicalOperator::zero());
      }
    }
  }
  return report;
}

}  // namespace gbs
