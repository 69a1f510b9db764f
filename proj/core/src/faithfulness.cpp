#include "gbs/faithfulness.hpp"

#include <algorithm>

#include "gbs/error.hpp"

namespace gbs {

namespace {

const Interval& unit_domain(const BranchingSystem& bs, VertexId w) {
  const auto& pieces = bs.domain_set(w).pieces();
  if (pieces.size() != 1 || pieces.front().length() != QuadScalar(1)) {
    throw Error(ErrorKind::NotRotationSystem,
                "D of '" + bs.graph().vertex_name(w) + "' is not a unit interval");
  }
  return pieces.front();
}

}  // namespace

QuadScalar cycle_angle(const BranchingSystem& bs, VertexId w) {
  const DirectedGraph& g = bs.graph();
  const Path alpha = exitless_cycle_at(g, w);
  QuadScalar sum;
  for (EdgeId e : alpha.edges()) {
    const auto theta = bs.rotation_angle(e);
    if (!theta) {
      throw Error(ErrorKind::NotRotationSystem,
                  "cycle edge '" + g.edge_name(e) + "' carries no rotation angle");
    }
    sum += *theta;
  }
  const QuadScalar theta_w = sum.mod_one();
  const Interval& d = unit_domain(bs, w);
  if (!(compose_path_map(bs, alpha) == rotation_map(d, d, theta_w))) {
    throw Error(ErrorKind::Internal, "f_alpha at '" + g.vertex_name(w) + "' is not the rotation by theta_w");
  }
  return theta_w;
}

SeparatingSet separating_set(const BranchingSystem& bs, VertexId w, std::span<const unsigned> powers) {
  if (powers.empty()) throw Error(ErrorKind::InvalidArgument, "separating set needs at least one power");
  if (std::find(powers.begin(), powers.end(), 0u) != powers.end()) {
    throw Error(ErrorKind::InvalidArgument, "cycle powers must be positive");
  }
  const QuadScalar theta = cycle_angle(bs, w);
  if (theta.is_rational()) {
    throw Error(ErrorKind::RationalTheta, "theta_w = " + theta.to_string() + " is rational at '" +
                                              bs.graph().vertex_name(w) + "'");
  }
  const Interval& d = unit_domain(bs, w);
  const QuadScalar& l1 = d.lo;

  std::optional<QuadScalar> margin;
  for (unsigned q : powers) {
    // f_{alpha^q}(l_1) = l_1 + t and the wrap point is l_1 + 1 - t.
    const QuadScalar t = (QuadScalar(static_cast<long>(q)) * theta).mod_one();
    const QuadScalar m = std::min(t, QuadScalar(1) - t);
    if (!margin || m < *margin) margin = m;
  }
  const QuadScalar c = l1 + *margin / QuadScalar(2);
  SeparatingSet out{Interval{l1, c}, std::vector<unsigned>(powers.begin(), powers.end())};

  const Path alpha = exitless_cycle_at(bs.graph(), w);
  const IntervalSet f(out.set);
  for (unsigned q : powers) {
    const auto moved = compose_path_map(bs, alpha.power(q)).image(f);
    if (!moved.is_disjoint_from(f)) {
      throw Error(ErrorKind::Internal, "separating set intersects its image under power " + std::to_string(q));
    }
  }
  return out;
}

bool FaithfulnessVerdict::criterion_satisfied() const {
  return std::none_of(base_points.begin(), base_points.end(),
                      [](const BasePointVerdict& b) { return b.rational; });
}

FaithfulnessVerdict faithfulness_check(const BranchingSystem& bs, unsigned max_power) {
  if (max_power == 0) throw Error(ErrorKind::InvalidArgument, "max_power must be positive");
  const DirectedGraph& g = bs.graph();
  FaithfulnessVerdict verdict;
  verdict.max_power = max_power;
  std::vector<unsigned> powers(max_power);
  for (unsigned i = 0; i < max_power; ++i) powers[i] = i + 1;

  for (VertexId w : exitless_base_points(g)) {
    BasePointVerdict b{.base = w, .cycle = exitless_cycle_at(g, w), .theta = cycle_angle(bs, w)};
    b.rational = b.theta.is_rational();
    if (!b.rational) {
      b.separating = separating_set(bs, w, powers);
    } else {
      const Rational& r = b.theta.rational_part();
      const unsigned long q = r.get_den().get_ui();
      b.denominator = q;
      b.kernel_term = LeavittTerm::path(bs.graph_ptr(), b.cycle.power(q)) -
                      LeavittTerm::vertex(bs.graph_ptr(), w);
      b.kernel_confirmed = evaluate(*b.kernel_term, bs, Mode::cstar).is_zero();
      verdict.notes.push_back("kernel exponent at '" + g.vertex_name(w) +
                              "' is the reduced denominator q of theta_w = p/q, since q*theta_w is an "
                              "integer; p-fold powers need not return to the identity");
    }
    verdict.base_points.push_back(std::move(b));
  }
  return verdict;
}

std::vector<PowerProbe> power_profile(const BranchingSystem& bs, VertexId w, unsigned max_power,
                                      Mode mode) {
  const Path alpha = exitless_cycle_at(bs.graph(), w);
  const CanonicalOperator s_alpha = op_path(bs, alpha, mode);
  const CanonicalOperator pw = op_vertex(bs, w);
  std::vector<PowerProbe> out;
  // s_{alpha^n} = s_{alpha^(n-1)} s_alpha.
  CanonicalOperator power = s_alpha;
  for (unsigned n = 1; n <= max_power; ++n) {
    if (n > 1) power = power * s_alpha;
    const CanonicalOperator diff = power - pw;
    out.push_back({n, diff.is_zero(), distinguishing_function(diff)});
  }
  return out;
}

bool ConverseReport::all_vertices_nonzero() const {
  return std::all_of(vertex_nonzero.begin(), vertex_nonzero.end(), [](bool b) { return b; });
}

namespace {

ConverseReport build_converse(const DirectedGraph& g, Mode mode) {
  if (condition_L(g)) {
    throw Error(ErrorKind::ConditionLHolds, "graph satisfies Condition (L); every cycle has an exit");
  }
  const auto cycles = enumerate_simple_cycles(g);
  const auto it = std::find_if(cycles.begin(), cycles.end(), [](const CycleInfo& c) { return !c.has_exit; });
  const Path& original = it->path;

  // Edges alpha_1..alpha_n first, then the rest; vertices s(alpha_i) first.
  std::vector<EdgeId> edge_order(original.edges().begin(), original.edges().end());
  for (EdgeId e : g.edge_ids()) {
    if (std::find(edge_order.begin(), edge_order.end(), e) == edge_order.end()) edge_order.push_back(e);
  }
  std::vector<VertexId> vertex_order;
  for (EdgeId e : original.edges()) vertex_order.push_back(g.source(e));
  for (VertexId v : g.vertex_ids()) {
    if (std::find(vertex_order.begin(), vertex_order.end(), v) == vertex_order.end()) vertex_order.push_back(v);
  }
  auto reordered = std::make_shared<const DirectedGraph>(
      g.with_edge_order(edge_order).with_vertex_order(vertex_order));

  std::vector<std::string> names;
  for (EdgeId e : original.edges()) names.push_back(g.edge_name(e));
  Path alpha = Path::from_names(*reordered, names);

  BranchingSystem system = build_affine_system(reordered);
  LeavittTerm element = LeavittTerm::path_adjoint(reordered, alpha) -
                        LeavittTerm::vertex(reordered, alpha.source());
  const bool killed = evaluate(element, system, mode).is_zero();
  std::vector<bool> nonzero;
  for (VertexId v : reordered->vertex_ids()) nonzero.push_back(!op_vertex(system, v).is_zero());
  AxiomReport axioms = verify_axioms(system);
  RelationReport relations = verify_ck_relations(system, mode);
  return ConverseReport{std::move(system), std::move(alpha), std::move(element), killed,
                        std::move(nonzero), std::move(axioms), std::move(relations)};
}

}  // namespace

ConverseReport converse_ckut_cstar(const DirectedGraph& g) { return build_converse(g, Mode::cstar); }

PiecewiseAffineMap perturbation_map(const Interval& domain, const Interval& range) {
  if (domain.length() != QuadScalar(1) || range.length() != QuadScalar(1)) {
    throw Error(ErrorKind::InvalidMap, "perturbation needs unit intervals");
  }
  const QuadScalar& k = domain.lo;
  const QuadScalar& l = range.lo;
  const QuadScalar half = Rational(1, 2);
  const QuadScalar quarter = Rational(1, 4);
  const Rational slow(1, 2);
  const Rational fast(3, 2);
  // x -> l + (x - k)/2 on the left half, x -> l + 1/4 + 3(x - k - 1/2)/2 on the right.
  return PiecewiseAffineMap({
      {Interval{k, k + half}, Affine{slow, l - QuadScalar(slow) * k}},
      {Interval{k + half, domain.hi}, Affine{fast, l + quarter - QuadScalar(fast) * (k + half)}},
  });
}

ConverseLeavittReport converse_ckut_leavitt(const DirectedGraph& g) {
  ConverseReport affine = build_converse(g, Mode::algebraic);
  const EdgeId first = affine.cycle.front();
  const DirectedGraph& rg = affine.system.graph();
  const auto& dom = affine.system.domain_set(rg.range(first)).pieces().front();
  const auto& ran = affine.system.range_set(first).pieces().front();
  BranchingSystem perturbed = affine.system.with_map(first, perturbation_map(dom, ran));
  AxiomReport axioms = verify_axioms(perturbed);
  RelationReport relations = verify_ck_relations(perturbed, Mode::algebraic);
  KernelCheck check = is_in_kernel(affine.element, perturbed, Mode::algebraic);
  StepFunction image;
  if (check.witness) image = evaluate(affine.element, perturbed, Mode::algebraic).apply(*check.witness);
  return ConverseLeavittReport{std::move(affine), std::move(perturbed), std::move(axioms),
                               std::move(relations), std::move(check), std::move(image)};
}

}  // namespace gbs
