#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gbs {

/// Position of a vertex in the graph's declared vertex list.
struct VertexId {
  std::size_t index = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Position of an edge in the graph's declared edge list.
struct EdgeId {
  std::size_t index = 0;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// Edge as it appears in input files: names only.
struct EdgeRecord {
  std::string id;
  std::string source;
  std::string range;
  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Throws gbs::Error (DanglingEdge, DuplicateId, InvalidId, EmptyGraph) unless
/// the lists describe a valid finite directed graph.
void validate_graph(std::span<const std::string> vertices, std::span<const EdgeRecord> edges);

/// Finite directed graph E = (E^0, E^1, r, s). Immutable once constructed.
///
/// The order of the vertex and edge lists is significant: it fixes the
/// enumeration used by the standard interval layout and the deterministic
/// order of every report.
class DirectedGraph {
 public:
  struct Edge {
    std::string id;
    VertexId source;
    VertexId range;
  };

  DirectedGraph(std::vector<std::string> vertices, std::vector<EdgeRecord> edges);

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const;
  const std::string& edge_name(EdgeId e) const;
  VertexId source(EdgeId e) const;
  VertexId range(EdgeId e) const;

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  /// Like find_*, but throw UnknownVertex / UnknownEdge.
  VertexId vertex(std::string_view name) const;
  EdgeId edge(std::string_view name) const;

  bool contains(VertexId v) const noexcept { return v.index < vertices_.size(); }
  bool contains(EdgeId e) const noexcept { return e.index < edges_.size(); }

  /// s^{-1}(v) in edge-list order.
  std::span<const EdgeId> out_edges(VertexId v) const;
  /// r^{-1}(v) in edge-list order.
  std::span<const EdgeId> in_edges(VertexId v) const;

  std::vector<VertexId> vertex_ids() const;
  std::vector<EdgeId> edge_ids() const;

  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  std::vector<EdgeRecord> edge_records() const;

  /// Same graph with the edge list permuted: new position i holds old edge order[i].
  DirectedGraph with_edge_order(std::span<const EdgeId> order) const;
  /// Same graph with the vertex list permuted.
  DirectedGraph with_vertex_order(std::span<const VertexId> order) const;

  /// True iff the edges are consecutive (r(e_i) = s(e_{i+1})) and nonempty.
  bool is_path(std::span<const EdgeId> edges) const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// Nonempty sequence of edges with r(e_i) = s(e_{i+1}).
class Path {
 public:
  /// Throws NotAPath if `edges` is empty or not consecutive in `g`.
  Path(const DirectedGraph& g, std::vector<EdgeId> edges);
  /// Resolves edge names; throws UnknownEdge or NotAPath.
  static Path from_names(const DirectedGraph& g, std::span<const std::string> names);

  std::span<const EdgeId> edges() const noexcept { return edges_; }
  std::size_t length() const noexcept { return edges_.size(); }
  EdgeId front() const { return edges_.front(); }
  EdgeId back() const { return edges_.back(); }
  VertexId source() const noexcept { return source_; }
  VertexId range() const noexcept { return range_; }
  bool is_cycle() const noexcept { return source_ == range_; }

  /// The path followed by `tail`. Throws NotAPath if r(*this) != s(tail).
  Path then(const Path& tail) const;
  /// n-fold concatenation; requires a cycle and n >= 1.
  Path power(std::size_t n) const;

  std::string to_string(const DirectedGraph& g) const;

  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  Path(std::vector<EdgeId> edges, VertexId source, VertexId range);

  std::vector<EdgeId> edges_;
  VertexId source_;
  VertexId range_;
};

struct CycleInfo {
  Path path;
  VertexId base;
  bool simple = false;
  bool has_exit = false;
};

/// Vertices with empty source preimage, s^{-1}(v) = {}.
std::vector<VertexId> sinks(const DirectedGraph& g);
/// Vertices with empty range preimage, r^{-1}(v) = {}.
std::vector<VertexId> sources(const DirectedGraph& g);

/// Every based simple cycle, one entry per choice of base point, ordered by
/// (base vertex position, lexicographic edge positions). An exit at step i is an
/// edge f != e_i with s(f) = s(e_i).
std::vector<CycleInfo> enumerate_simple_cycles(const DirectedGraph& g);

/// True iff every cycle has an exit.
bool condition_L(const DirectedGraph& g);

/// W: base points of exitless cycles, in vertex order. Throws
/// NonUniqueSimpleCycle if a base point carries two exitless simple cycles.
std::vector<VertexId> exitless_base_points(const DirectedGraph& g);

/// The unique simple exitless cycle based at w. Throws NotABasePoint.
Path exitless_cycle_at(const DirectedGraph& g, VertexId w);

/// Edges lying on some exitless simple cycle.
std::vector<EdgeId> exitless_cycle_edges(const DirectedGraph& g);

}  // namespace gbs
