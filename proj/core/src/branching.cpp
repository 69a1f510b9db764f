#include "gbs/branching.hpp"

#include "gbs/error.hpp"

namespace gbs {

Layout standard_layout(const DirectedGraph& g) {
  Layout layout;
  layout.ranges.reserve(g.num_edges());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const long k = static_cast<long>(i);
    layout.ranges.emplace_back(Interval{QuadScalar(k), QuadScalar(k + 1)});
  }
  layout.domains.resize(g.num_vertices());
  long sink_number = 0;
  for (VertexId v : g.vertex_ids()) {
    const auto out = g.out_edges(v);
    if (out.empty()) {
      ++sink_number;
      layout.domains[v.index] = IntervalSet(Interval{QuadScalar(-sink_number), QuadScalar(1 - sink_number)});
      continue;
    }
    std::vector<Interval> pieces;
    for (EdgeId e : out) {
      const auto& r = layout.ranges[e.index].pieces();
      pieces.insert(pieces.end(), r.begin(), r.end());
    }
    layout.domains[v.index] = IntervalSet::from_pieces(std::move(pieces));
  }
  return layout;
}

std::string_view to_string(SystemKind kind) noexcept {
  switch (kind) {
    case SystemKind::affine: return "affine";
    case SystemKind::rotation: return "rotation";
    case SystemKind::custom: return "custom";
  }
  return "custom";
}

BranchingSystem::BranchingSystem(std::shared_ptr<const DirectedGraph> graph, Layout layout,
                                 std::vector<PiecewiseAffineMap> maps, SystemKind kind,
                                 std::map<EdgeId, QuadScalar> angles,
                                 std::vector<std::string> notes)
    : graph_(std::move(graph)),
      layout_(std::move(layout)),
      maps_(std::move(maps)),
      kind_(kind),
      angles_(std::move(angles)),
      notes_(std::move(notes)) {
  if (!graph_) throw Error(ErrorKind::Internal, "branching system needs a graph");
  if (layout_.ranges.size() != graph_->num_edges() || maps_.size() != graph_->num_edges() ||
      layout_.domains.size() != graph_->num_vertices()) {
    throw Error(ErrorKind::GraphMismatch, "branching system data does not match the graph size");
  }
  inverses_.reserve(maps_.size());
  for (const auto& f : maps_) inverses_.push_back(f.inverse());
}

const IntervalSet& BranchingSystem::range_set(EdgeId e) const {
  if (!graph_->contains(e)) throw Error(ErrorKind::UnknownEdge, "edge index out of range");
  return layout_.ranges[e.index];
}

const IntervalSet& BranchingSystem::domain_set(VertexId v) const {
  if (!graph_->contains(v)) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  return layout_.domains[v.index];
}

const PiecewiseAffineMap& BranchingSystem::map(EdgeId e) const {
  if (!graph_->contains(e)) throw Error(ErrorKind::UnknownEdge, "edge index out of range");
  return maps_[e.index];
}

const PiecewiseAffineMap& BranchingSystem::inverse_map(EdgeId e) const {
  if (!graph_->contains(e)) throw Error(ErrorKind::UnknownEdge, "edge index out of range");
  return inverses_[e.index];
}

std::optional<QuadScalar> BranchingSystem::rotation_angle(EdgeId e) const {
  auto it = angles_.find(e);
  if (it == angles_.end()) return std::nullopt;
  return it->second;
}

BranchingSystem BranchingSystem::with_map(EdgeId e, PiecewiseAffineMap f) const {
  if (!graph_->contains(e)) throw Error(ErrorKind::UnknownEdge, "edge index out of range");
  auto maps = maps_;
  maps[e.index] = std::move(f);
  auto angles = angles_;
  angles.erase(e);
  return BranchingSystem(graph_, layout_, std::move(maps), SystemKind::custom, std::move(angles),
                         notes_);
}

BranchingSystem BranchingSystem::with_range_set(EdgeId e, IntervalSet r) const {
  if (!graph_->contains(e)) throw Error(ErrorKind::UnknownEdge, "edge index out of range");
  auto layout = layout_;
  layout.ranges[e.index] = std::move(r);
  return BranchingSystem(graph_, std::move(layout), maps_, SystemKind::custom, angles_, notes_);
}

BranchingSystem BranchingSystem::with_domain_set(VertexId v, IntervalSet d) const {
  if (!graph_->contains(v)) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  auto layout = layout_;
  layout.domains[v.index] = std::move(d);
  return BranchingSystem(graph_, std::move(layout), maps_, SystemKind::custom, angles_, notes_);
}

PiecewiseAffineMap uniform_order_preserving_map(const IntervalSet& from, const IntervalSet& to) {
  if (from.empty() || to.empty()) {
    throw Error(ErrorKind::EmptyRangeDomain, "cannot map between empty sets");
  }
  const QuadScalar ratio = to.measure() / from.measure();
  if (!ratio.is_rational()) {
    throw Error(ErrorKind::IrrationalSlope, "measure ratio " + ratio.to_string() + " is irrational");
  }
  const Rational slope = ratio.rational_part();
  const QuadScalar s(slope);

  std::vector<AffineBranch> branches;
  const auto& src = from.pieces();
  const auto& dst = to.pieces();
  std::size_t i = 0, j = 0;
  QuadScalar x = src[0].lo;
  QuadScalar y = dst[0].lo;
  while (i < src.size() && j < dst.size()) {
    // Advance by the shorter of what remains in the current source and target pieces.
    const QuadScalar src_left = src[i].hi - x;
    const QuadScalar dst_left = (dst[j].hi - y) / s;
    const QuadScalar step = std::min(src_left, dst_left);
    branches.push_back({Interval{x, x + step}, Affine{slope, y - s * x}});
    x += step;
    y += s * step;
    if (x == src[i].hi && ++i < src.size()) x = src[i].lo;
    if (y == dst[j].hi && ++j < dst.size()) y = dst[j].lo;
  }
  return PiecewiseAffineMap(std::move(branches));
}

PiecewiseAffineMap rotation_map(const Interval& domain, const Interval& range,
                                const QuadScalar& theta) {
  if (theta < QuadScalar(0) || !(theta < QuadScalar(1))) {
    throw Error(ErrorKind::ThetaOutOfRange, "rotation angle " + theta.to_string() + " not in [0,1)");
  }
  if (domain.length() != QuadScalar(1) || range.length() != QuadScalar(1)) {
    throw Error(ErrorKind::InvalidMap, "rotation maps need unit intervals");
  }
  const QuadScalar& k = domain.lo;
  const QuadScalar& l = range.lo;
  const QuadScalar wrap = k + QuadScalar(1) - theta;
  std::vector<AffineBranch> branches;
  branches.push_back({Interval{k, wrap}, Affine{Rational(1), l - k + theta}});
  if (!theta.is_zero()) {
    branches.push_back({Interval{wrap, domain.hi}, Affine{Rational(1), l - k + theta - QuadScalar(1)}});
  }
  return PiecewiseAffineMap(std::move(branches));
}

BranchingSystem build_affine_system(const DirectedGraph& g) {
  return build_affine_system(std::make_shared<const DirectedGraph>(g));
}

BranchingSystem build_affine_system(std::shared_ptr<const DirectedGraph> g) {
  Layout layout = standard_layout(*g);
  return build_affine_system(std::move(g), std::move(layout));
}

BranchingSystem build_affine_system(std::shared_ptr<const DirectedGraph> g, Layout layout) {
  std::vector<PiecewiseAffineMap> maps;
  maps.reserve(g->num_edges());
  for (EdgeId e : g->edge_ids()) {
    const auto& from = layout.domains.at(g->range(e).index);
    if (from.empty()) {
      throw Error(ErrorKind::EmptyRangeDomain,
                  "D of range vertex '" + g->vertex_name(g->range(e)) + "' is empty");
    }
    maps.push_back(uniform_order_preserving_map(from, layout.ranges.at(e.index)));
  }
  return BranchingSystem(std::move(g), std::move(layout), std::move(maps), SystemKind::affine);
}

BranchingSystem build_rotation_system(const DirectedGraph& g,
                                      const std::map<EdgeId, QuadScalar>& thetas) {
  return build_rotation_system(std::make_shared<const DirectedGraph>(g), thetas);
}

BranchingSystem build_rotation_system(std::shared_ptr<const DirectedGraph> g,
                                      const std::map<EdgeId, QuadScalar>& thetas) {
  const BranchingSystem base = build_affine_system(g);
  const auto cycle_edges = exitless_cycle_edges(*g);
  std::vector<PiecewiseAffineMap> maps;
  for (EdgeId e : g->edge_ids()) maps.push_back(base.map(e));

  std::map<EdgeId, QuadScalar> angles;
  for (EdgeId e : cycle_edges) {
    auto it = thetas.find(e);
    if (it == thetas.end()) {
      throw Error(ErrorKind::MissingTheta, "no rotation angle for cycle edge '" + g->edge_name(e) + "'");
    }
    const auto& dom = base.domain_set(g->range(e)).pieces();
    const auto& ran = base.range_set(e).pieces();
    if (dom.size() != 1 || ran.size() != 1) {
      throw Error(ErrorKind::InvalidMap, "cycle edge '" + g->edge_name(e) + "' is not unit-to-unit");
    }
    maps[e.index] = rotation_map(dom.front(), ran.front(), it->second);
    angles.emplace(e, it->second);
  }

  std::vector<std::string> notes;
  for (const auto& [e, theta] : thetas) {
    if (!angles.contains(e)) {
      notes.push_back("ThetaOnNonCycleEdge: angle for edge '" + g->edge_name(e) +
                      "' ignored; it lies on no exitless cycle");
    }
  }
  Layout layout = base.layout();
  return BranchingSystem(std::move(g), std::move(layout), std::move(maps), SystemKind::rotation,
                         std::move(angles), std::move(notes));
}

std::string_view to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::ranges_disjoint: return "ranges_disjoint";
    case Axiom::domains_disjoint: return "domains_disjoint";
    case Axiom::range_in_source_domain: return "range_in_source_domain";
    case Axiom::domain_is_union_of_ranges: return "domain_is_union_of_ranges";
    case Axiom::maps_bijective: return "maps_bijective";
    case Axiom::positive_measure: return "positive_measure";
  }
  return "unknown";
}

bool AxiomReport::failed(Axiom axiom) const {
  for (const auto& f : failures) {
    if (f.axiom == axiom) return true;
  }
  return false;
}

namespace {

std::optional<QuadScalar> first_point(const IntervalSet& s) {
  if (s.empty()) return std::nullopt;
  return s.pieces().front().lo;
}

std::optional<QuadScalar> first_difference(const IntervalSet& a, const IntervalSet& b) {
  auto d = a.subtract(b).unite(b.subtract(a));
  return first_point(d);
}

std::optional<QuadScalar> first_mismatch(const PiecewiseAffineMap& m, const PiecewiseAffineMap& id) {
  // Both maps are canonical; report the first branch that differs.
  const auto& mb = m.branches();
  const auto& ib = id.branches();
  for (std::size_t i = 0; i < std::max(mb.size(), ib.size()); ++i) {
    if (i >= mb.size()) return ib[i].source.lo;
    if (i >= ib.size() || !(mb[i] == ib[i])) return mb[i].source.lo;
  }
  return std::nullopt;
}

}  // namespace

AxiomReport verify_axioms(const BranchingSystem& bs) {
  const DirectedGraph& g = bs.graph();
  AxiomReport report;
  auto fail = [&](Axiom a, std::string subject, std::optional<QuadScalar> w, std::string detail) {
    report.failures.push_back({a, std::move(subject), std::move(w), std::move(detail)});
  };

  const auto edges = g.edge_ids();
  const auto vertices = g.vertex_ids();

  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      ++report.checks;
      const auto overlap = bs.range_set(edges[i]).intersect(bs.range_set(edges[j]));
      if (!overlap.empty()) {
        fail(Axiom::ranges_disjoint, g.edge_name(edges[i]) + "," + g.edge_name(edges[j]),
             first_point(overlap), "R sets overlap on " + overlap.to_string());
      }
    }
  }

  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      ++report.checks;
      const auto overlap = bs.domain_set(vertices[i]).intersect(bs.domain_set(vertices[j]));
      if (!overlap.empty()) {
        fail(Axiom::domains_disjoint, g.vertex_name(vertices[i]) + "," + g.vertex_name(vertices[j]),
             first_point(overlap), "D sets overlap on " + overlap.to_string());
      }
    }
  }

  for (EdgeId e : edges) {
    ++report.checks;
    const auto outside = bs.range_set(e).subtract(bs.domain_set(g.source(e)));
    if (!outside.empty()) {
      fail(Axiom::range_in_source_domain, g.edge_name(e), first_point(outside),
           "R not contained in D of source; excess " + outside.to_string());
    }
  }

  for (VertexId v : vertices) {
    const auto out = g.out_edges(v);
    if (out.empty()) continue;
    ++report.checks;
    IntervalSet united;
    for (EdgeId e : out) united = united.unite(bs.range_set(e));
    if (!(united == bs.domain_set(v))) {
      fail(Axiom::domain_is_union_of_ranges, g.vertex_name(v),
           first_difference(united, bs.domain_set(v)), "D differs from the union of its R sets");
    }
  }

  for (EdgeId e : edges) {
    ++report.checks;
    const auto& f = bs.map(e);
    const auto& f_inv = bs.inverse_map(e);
    const auto& dom = bs.domain_set(g.range(e));
    const auto& ran = bs.range_set(e);
    const std::string name = g.edge_name(e);
    if (!(f.domain() == dom)) {
      fail(Axiom::maps_bijective, name, first_difference(f.domain(), dom),
           "domain of f differs from D of range vertex");
      continue;
    }
    if (!(f.codomain() == ran)) {
      fail(Axiom::maps_bijective, name, first_difference(f.codomain(), ran),
           "image of f differs from R");
      continue;
    }
    const auto left = compose(f, f_inv);
    if (!(left == PiecewiseAffineMap::identity(ran))) {
      fail(Axiom::maps_bijective, name, first_mismatch(left, PiecewiseAffineMap::identity(ran)),
           "f o f^-1 is not the identity on R");
    }
    const auto right = compose(f_inv, f);
    if (!(right == PiecewiseAffineMap::identity(dom))) {
      fail(Axiom::maps_bijective, name, first_mismatch(right, PiecewiseAffineMap::identity(dom)),
           "f^-1 o f is not the identity on D");
    }
    // Radon-Nikodym densities: Phi_f = slope of f on D, Phi_{f^-1} = slope of
    // f^-1 on R; their product along f must be 1.
    for (const auto& b : f.branches()) {
      for (const auto& c : f_inv.branches()) {
        if (!intersect(b.image(), c.source)) continue;
        if (b.map.slope * c.map.slope != 1) {
          fail(Axiom::maps_bijective, name, b.source.lo, "Phi_f * (Phi_f^-1 o f) != 1");
        }
      }
    }
  }

  for (VertexId v : vertices) {
    ++report.checks;
    if (!(bs.domain_set(v).measure() > QuadScalar(0))) {
      fail(Axiom::positive_measure, g.vertex_name(v), std::nullopt, "D has measure zero");
    }
  }
  return report;
}

PiecewiseAffineMap compose_path_map(const BranchingSystem& bs, const Path& p) {
  if (!bs.graph().is_path(p.edges())) {
    throw Error(ErrorKind::NotAPath, "path does not belong to the system's graph");
  }
  const auto edges = p.edges();
  PiecewiseAffineMap out = bs.map(edges.back());
  for (std::size_t i = edges.size() - 1; i-- > 0;) out = compose(bs.map(edges[i]), out);
  return out;
}

}  // namespace gbs
