#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbs/branching.hpp"
#include "gbs/leavitt.hpp"
#include "gbs/representation.hpp"

namespace gbs {

/// theta_w = (theta_1 + ... + theta_m) mod 1 over the exitless simple cycle
/// at w. Checks that f_alpha is the rotation x -> (x + theta_w) mod 1 + l_1.
/// Throws NotABasePoint, NotRotationSystem.
QuadScalar cycle_angle(const BranchingSystem& bs, VertexId w);

struct SeparatingSet {
  /// F = [l_1, c).
  Interval set;
  std::vector<unsigned> powers;
};

/// F = [l_1, c) with f_{alpha^q}(F) ∩ F = ∅ for every q in `powers`, where
/// c = l_1 + m/2 and m = min_q min(frac(q theta_w), 1 - frac(q theta_w)).
/// Disjointness is re-verified through compose_path_map. Throws
/// RationalTheta, NotABasePoint, NotRotationSystem.
SeparatingSet separating_set(const BranchingSystem& bs, VertexId w, std::span<const unsigned> powers);

struct BasePointVerdict {
  VertexId base;
  Path cycle;
  QuadScalar theta;
  bool rational = false;
  /// Irrational case.
  std::optional<SeparatingSet> separating = std::nullopt;
  /// Rational case: theta_w = p/q in lowest terms, kernel element s_{alpha^q} - p_w.
  std::optional<unsigned long> denominator = std::nullopt;
  std::optional<LeavittTerm> kernel_term = std::nullopt;
  bool kernel_confirmed = false;
};

struct FaithfulnessVerdict {
  std::vector<BasePointVerdict> base_points;
  unsigned max_power = 10;
  std::vector<std::string> notes;

  /// Every theta_w irrational (vacuous when W is empty).
  bool criterion_satisfied() const;
};

/// For each w in W: irrational theta_w yields a separating set for the powers
/// 1..max_power; rational theta_w = p/q yields s_{alpha^q} - p_w, confirmed
/// to evaluate to the zero operator. Throws NotRotationSystem.
FaithfulnessVerdict faithfulness_check(const BranchingSystem& bs, unsigned max_power = 10);

struct PowerProbe {
  unsigned power = 0;
  bool identity = false;
  /// When s_{alpha^n} - p_w is nonzero: phi with nonzero image.
  std::optional<StepFunction> witness;
};

/// Evaluates s_{alpha^n} - p_w for n = 1..max_power.
std::vector<PowerProbe> power_profile(const BranchingSystem& bs, VertexId w, unsigned max_power,
                                      Mode mode = Mode::cstar);

struct ConverseReport {
  /// The graph re-enumerated so the exitless cycle's edges come first.
  BranchingSystem system;
  Path cycle;
  /// s_alpha^* - p_{s(alpha_1)}.
  LeavittTerm element;
  bool element_in_kernel = false;
  std::vector<bool> vertex_nonzero;
  AxiomReport axioms;
  RelationReport relations;

  bool all_vertices_nonzero() const;
};

/// Builds the affine system with f_alpha = id for a graph violating
/// Condition (L) and confirms pi(s_alpha^* - p_{s(alpha_1)}) = 0 while every
/// pi(p_v) != 0. Throws ConditionLHolds.
ConverseReport converse_ckut_cstar(const DirectedGraph& g);

struct ConverseLeavittReport {
  ConverseReport affine;
  /// Same system with f_{alpha_1} replaced by a two-branch increasing bijection.
  BranchingSystem perturbed;
  AxiomReport perturbed_axioms;
  RelationReport perturbed_relations;
  KernelCheck perturbed_check;
  /// pi(s_alpha^* - p) applied to the witness.
  StepFunction witness_image;
};

/// Leavitt variant: the affine system kills s_alpha^* - p in algebraic mode,
/// and the perturbed system exhibits a step function it does not kill.
/// Throws ConditionLHolds.
ConverseLeavittReport converse_ckut_leavitt(const DirectedGraph& g);

/// [k, k+1/2) -> [l, l+1/4) with slope 1/2 and [k+1/2, k+1) -> [l+1/4, l+1)
/// with slope 3/2.
PiecewiseAffineMap perturbation_map(const Interval& domain, const Interval& range);

}  // namespace gbs
