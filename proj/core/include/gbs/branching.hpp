#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gbs/affine_map.hpp"
#include "gbs/graph.hpp"
#include "gbs/interval.hpp"

namespace gbs {

/// Range sets R_e (by edge position) and domain sets D_v (by vertex position).
struct Layout {
  std::vector<IntervalSet> ranges;
  std::vector<IntervalSet> domains;
};

/// R_{e_i} = [i-1, i) in edge order; the i-th sink gets D = [-i, 1-i); every
/// other vertex gets D_v = union of R_e over s(e) = v.
Layout standard_layout(const DirectedGraph& g);

enum class SystemKind { affine, rotation, custom };

std::string_view to_string(SystemKind kind) noexcept;

/// E-branching system on a finite union of intervals with Lebesgue measure:
/// sets R_e, D_v and piecewise-affine bijections f_e : D_{r(e)} -> R_e.
///
/// Construction does not check the branching axioms; verify_axioms does.
/// This lets tampered systems exist for testing.
class BranchingSystem {
 public:
  BranchingSystem(std::shared_ptr<const DirectedGraph> graph, Layout layout,
                  std::vector<PiecewiseAffineMap> maps, SystemKind kind,
                  std::map<EdgeId, QuadScalar> angles = {}, std::vector<std::string> notes = {});

  const DirectedGraph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const DirectedGraph>& graph_ptr() const noexcept { return graph_; }
  SystemKind kind() const noexcept { return kind_; }

  const IntervalSet& range_set(EdgeId e) const;
  const IntervalSet& domain_set(VertexId v) const;
  const Layout& layout() const noexcept { return layout_; }
  /// f_e.
  const PiecewiseAffineMap& map(EdgeId e) const;
  /// f_e^{-1}.
  const PiecewiseAffineMap& inverse_map(EdgeId e) const;

  /// Rotation angle theta_e for rotated cycle edges.
  std::optional<QuadScalar> rotation_angle(EdgeId e) const;
  const std::map<EdgeId, QuadScalar>& rotation_angles() const noexcept { return angles_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }

  BranchingSystem with_map(EdgeId e, PiecewiseAffineMap f) const;
  BranchingSystem with_range_set(EdgeId e, IntervalSet r) const;
  BranchingSystem with_domain_set(VertexId v, IntervalSet d) const;

 private:
  std::shared_ptr<const DirectedGraph> graph_;
  Layout layout_;
  std::vector<PiecewiseAffineMap> maps_;
  std::vector<PiecewiseAffineMap> inverses_;
  SystemKind kind_;
  std::map<EdgeId, QuadScalar> angles_;
  std::vector<std::string> notes_;
};

/// Increasing bijection from `from` onto `to` with one constant slope
/// measure(to)/measure(from): the pieces of `from` are laid end to end onto
/// the pieces of `to`. Throws EmptyRangeDomain or IrrationalSlope.
PiecewiseAffineMap uniform_order_preserving_map(const IntervalSet& from, const IntervalSet& to);

/// (x - k + theta) mod 1 + l from [k, k+1) onto [l, l+1); at most two branches.
/// Throws ThetaOutOfRange unless 0 <= theta < 1, InvalidMap unless both
/// intervals have length 1.
PiecewiseAffineMap rotation_map(const Interval& domain, const Interval& range,
                                const QuadScalar& theta);

/// Standard layout with every f_e the uniform order-preserving map.
BranchingSystem build_affine_system(const DirectedGraph& g);
BranchingSystem build_affine_system(std::shared_ptr<const DirectedGraph> g);
BranchingSystem build_affine_system(std::shared_ptr<const DirectedGraph> g, Layout layout);

/// Affine system with each edge on an exitless simple cycle replaced by a
/// rotation by its theta. Thetas on other edges are ignored (with a note).
/// Throws MissingTheta, ThetaOutOfRange.
BranchingSystem build_rotation_system(std::shared_ptr<const DirectedGraph> g,
                                      const std::map<EdgeId, QuadScalar>& thetas);
BranchingSystem build_rotation_system(const DirectedGraph& g,
                                      const std::map<EdgeId, QuadScalar>& thetas);

enum class Axiom {
  ranges_disjoint = 1,
  domains_disjoint = 2,
  range_in_source_domain = 3,
  domain_is_union_of_ranges = 4,
  maps_bijective = 5,
  positive_measure = 6,
};

std::string_view to_string(Axiom axiom) noexcept;

struct AxiomFailure {
  Axiom axiom;
  std::string subject;
  std::optional<QuadScalar> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomFailure> failures;
  std::size_t checks = 0;

  bool ok() const noexcept { return failures.empty(); }
  bool failed(Axiom axiom) const;
};

/// Checks the five branching-system axioms exactly, plus measure(D_v) > 0.
AxiomReport verify_axioms(const BranchingSystem& bs);

/// f_alpha = f_{alpha_1} ∘ ... ∘ f_{alpha_n} : D_{r(alpha_n)} -> R_{alpha_1}.
/// Throws NotAPath when `p` is not a path of bs.graph().
PiecewiseAffineMap compose_path_map(const BranchingSystem& bs, const Path& p);

}  // namespace gbs
