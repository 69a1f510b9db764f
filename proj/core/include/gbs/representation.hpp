#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbs/branching.hpp"
#include "gbs/canonical_operator.hpp"

namespace gbs {

/// cstar: weights are square roots of Radon-Nikodym densities.
/// algebraic: the Leavitt path algebra representation, all weights 1.
enum class Mode { cstar, algebraic };

std::string_view to_string(Mode mode) noexcept;
/// "cstar" or "algebraic"; throws ParseError.
Mode parse_mode(std::string_view text);

/// pi(p_v): multiplication by chi_{D_v}.
CanonicalOperator op_vertex(const BranchingSystem& bs, VertexId v);
/// pi(s_e) phi = Phi_{f_e^-1}^{1/2} (phi ∘ f_e^-1) on R_e.
CanonicalOperator op_edge(const BranchingSystem& bs, EdgeId e, Mode mode);
/// pi(s_e)^* phi = Phi_{f_e}^{1/2} (phi ∘ f_e) on D_{r(e)}.
CanonicalOperator op_edge_adjoint(const BranchingSystem& bs, EdgeId e, Mode mode);

/// pi(s_alpha) as the product of edge operators.
CanonicalOperator op_path(const BranchingSystem& bs, const Path& p, Mode mode);
CanonicalOperator op_path_adjoint(const BranchingSystem& bs, const Path& p, Mode mode);
/// pi(s_alpha) built in one step from f_alpha = compose_path_map(p).
CanonicalOperator op_path_direct(const BranchingSystem& bs, const Path& p, Mode mode);

struct RelationCheck {
  std::string relation;
  std::string subject;
  bool passed = true;
  /// Step function on which the two sides differ, for failed checks.
  std::optional<StepFunction> witness;
};

struct RelationReport {
  Mode mode = Mode::cstar;
  std::vector<RelationCheck> checks;

  bool ok() const noexcept;
  std::vector<const RelationCheck*> failures() const;
};

/// Cuntz-Krieger relations as exact operator identities:
///   s_e^* s_e = p_{r(e)};
///   s_e s_e^* = chi_{R_e} with R_e ⊆ D_{s(e)} (s_e s_e^* <= p_{s(e)});
///   p_v = sum_{s(e)=v} s_e s_e^* for 0 < |s^{-1}(v)|;
///   p_v p_w = 0 and s_e s_e^* s_f s_f^* = 0 for v != w, e != f.
/// In algebraic mode the Leavitt forms are checked as well:
///   p_{s(e)} s_e = s_e p_{r(e)} = s_e, p_{r(e)} s_e^* = s_e^* p_{s(e)} = s_e^*,
///   s_e^* s_f = 0 for e != f.
RelationReport verify_ck_relations(const BranchingSystem& bs, Mode mode = Mode::cstar);

}  // namespace gbs
