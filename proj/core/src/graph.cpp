#include "gbs/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "gbs/error.hpp"

namespace gbs {

void validate_graph(std::span<const std::string> vertices, std::span<const EdgeRecord> edges) {
  if (vertices.empty()) {
    throw Error(ErrorKind::EmptyGraph, "graph must declare at least one vertex");
  }
  std::unordered_set<std::string_view> vertex_names;
  for (const auto& v : vertices) {
    if (v.empty()) throw Error(ErrorKind::InvalidId, "vertex ids must be nonempty");
    if (!vertex_names.insert(v).second) {
      throw Error(ErrorKind::DuplicateId, "duplicate vertex id '" + v + "'");
    }
  }
  std::unordered_set<std::string_view> edge_names;
  for (const auto& e : edges) {
    if (e.id.empty()) throw Error(ErrorKind::InvalidId, "edge ids must be nonempty");
    if (!edge_names.insert(e.id).second) {
      throw Error(ErrorKind::DuplicateId, "duplicate edge id '" + e.id + "'");
    }
    if (!vertex_names.contains(e.source)) {
      throw Error(ErrorKind::DanglingEdge,
                  "edge '" + e.id + "' has unknown source vertex '" + e.source + "'");
    }
    if (!vertex_names.contains(e.range)) {
      throw Error(ErrorKind::DanglingEdge,
                  "edge '" + e.id + "' has unknown range vertex '" + e.range + "'");
    }
  }
}

DirectedGraph::DirectedGraph(std::vector<std::string> vertices, std::vector<EdgeRecord> edges) {
  validate_graph(vertices, edges);
  vertices_ = std::move(vertices);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    vertex_index_.emplace(vertices_[i], VertexId{i});
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const VertexId s = vertex_index_.at(edges[i].source);
    const VertexId r = vertex_index_.at(edges[i].range);
    edge_index_.emplace(edges[i].id, EdgeId{i});
    edges_.push_back(Edge{std::move(edges[i].id), s, r});
    out_[s.index].push_back(EdgeId{i});
    in_[r.index].push_back(EdgeId{i});
  }
}

const std::string& DirectedGraph::vertex_name(VertexId v) const {
  if (!contains(v)) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  return vertices_[v.index];
}

const std::string& DirectedGraph::edge_name(EdgeId e) const {
  if (!contains(e)) throw Error(ErrorKind::UnknownEdge, "edge index out of range");
  return edges_[e.index].id;
}

VertexId DirectedGraph::source(EdgeId e) const {
  if (!contains(e)) throw Error(ErrorKind::UnknownEdge, "edge index out of range");
  return edges_[e.index].source;
}

VertexId DirectedGraph::range(EdgeId e) const {
  if (!contains(e)) throw Error(ErrorKind::UnknownEdge, "edge index out of range");
  return edges_[e.index].range;
}

std::optional<VertexId> DirectedGraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> DirectedGraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId DirectedGraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
}

EdgeId DirectedGraph::edge(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw Error(ErrorKind::UnknownEdge, "unknown edge '" + std::string(name) + "'");
}

std::span<const EdgeId> DirectedGraph::out_edges(VertexId v) const {
  if (!contains(v)) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  return out_[v.index];
}

std::span<const EdgeId> DirectedGraph::in_edges(VertexId v) const {
  if (!contains(v)) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  return in_[v.index];
}

std::vector<VertexId> DirectedGraph::vertex_ids() const {
  std::vector<VertexId> ids(vertices_.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = VertexId{i};
  return ids;
}

std::vector<EdgeId> DirectedGraph::edge_ids() const {
  std::vector<EdgeId> ids(edges_.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = EdgeId{i};
  return ids;
}

std::vector<EdgeRecord> DirectedGraph::edge_records() const {
  std::vector<EdgeRecord> records;
  records.reserve(edges_.size());
  for (const auto& e : edges_) {
    records.push_back({e.id, vertices_[e.source.index], vertices_[e.range.index]});
  }
  return records;
}

namespace {

template <class Id>
void require_permutation(std::span<const Id> order, std::size_t n) {
  std::vector<bool> seen(n, false);
  if (order.size() != n) throw Error(ErrorKind::InvalidId, "reordering must be a permutation");
  for (Id id : order) {
    if (id.index >= n || seen[id.index]) {
      throw Error(ErrorKind::InvalidId, "reordering must be a permutation");
    }
    seen[id.index] = true;
  }
}

}  // namespace

DirectedGraph DirectedGraph::with_edge_order(std::span<const EdgeId> order) const {
  require_permutation(order, edges_.size());
  auto old = edge_records();
  std::vector<EdgeRecord> edges;
  edges.reserve(order.size());
  for (EdgeId e : order) edges.push_back(old[e.index]);
  return DirectedGraph(vertices_, std::move(edges));
}

DirectedGraph DirectedGraph::with_vertex_order(std::span<const VertexId> order) const {
  require_permutation(order, vertices_.size());
  std::vector<std::string> vertices;
  vertices.reserve(order.size());
  for (VertexId v : order) vertices.push_back(vertices_[v.index]);
  return DirectedGraph(std::move(vertices), edge_records());
}

bool DirectedGraph::is_path(std::span<const EdgeId> edges) const {
  if (edges.empty()) return false;
  for (EdgeId e : edges) {
    if (!contains(e)) return false;
  }
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (range(edges[i]) != source(edges[i + 1])) return false;
  }
  return true;
}

bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
  return a.vertices_ == b.vertices_ && a.edge_records() == b.edge_records();
}

// Path

Path::Path(std::vector<EdgeId> edges, VertexId source, VertexId range)
    : edges_(std::move(edges)), source_(source), range_(range) {}

Path::Path(const DirectedGraph& g, std::vector<EdgeId> edges) : edges_(std::move(edges)) {
  if (!g.is_path(edges_)) throw Error(ErrorKind::NotAPath, "edge sequence is not a path");
  source_ = g.source(edges_.front());
  range_ = g.range(edges_.back());
}

Path Path::from_names(const DirectedGraph& g, std::span<const std::string> names) {
  std::vector<EdgeId> edges;
  edges.reserve(names.size());
  for (const auto& n : names) edges.push_back(g.edge(n));
  return Path(g, std::move(edges));
}

Path Path::then(const Path& tail) const {
  if (range_ != tail.source_) throw Error(ErrorKind::NotAPath, "paths do not concatenate");
  std::vector<EdgeId> edges = edges_;
  edges.insert(edges.end(), tail.edges_.begin(), tail.edges_.end());
  return Path(std::move(edges), source_, tail.range_);
}

Path Path::power(std::size_t n) const {
  if (n == 0 || !is_cycle()) throw Error(ErrorKind::NotAPath, "power needs a cycle and n >= 1");
  std::vector<EdgeId> edges;
  edges.reserve(edges_.size() * n);
  for (std::size_t i = 0; i < n; ++i) edges.insert(edges.end(), edges_.begin(), edges_.end());
  return Path(std::move(edges), source_, range_);
}

std::string Path::to_string(const DirectedGraph& g) const {
  std::string out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += '.';
    out += g.edge_name(edges_[i]);
  }
  return out;
}

// Combinatorics

std::vector<VertexId> sinks(const DirectedGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertex_ids()) {
    if (g.out_edges(v).empty()) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> sources(const DirectedGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertex_ids()) {
    if (g.in_edges(v).empty()) out.push_back(v);
  }
  return out;
}

namespace {

bool cycle_has_exit(const DirectedGraph& g, std::span<const EdgeId> edges) {
  for (EdgeId e : edges) {
    if (g.out_edges(g.source(e)).size() > 1) return true;
  }
  return false;
}

void extend_cycles(const DirectedGraph& g, VertexId base, VertexId at,
                   std::vector<EdgeId>& stack, std::vector<bool>& visited,
                   std::vector<CycleInfo>& out) {
  for (EdgeId e : g.out_edges(at)) {
    const VertexId next = g.range(e);
    stack.push_back(e);
    if (next == base) {
      Path p(g, stack);
      out.push_back(CycleInfo{p, base, true, cycle_has_exit(g, stack)});
    } else if (!visited[next.index]) {
      visited[next.index] = true;
      extend_cycles(g, base, next, stack, visited, out);
      visited[next.index] = false;
    }
    stack.pop_back();
  }
}

}  // namespace

std::vector<CycleInfo> enumerate_simple_cycles(const DirectedGraph& g) {
  std::vector<CycleInfo> out;
  std::vector<EdgeId> stack;
  std::vector<bool> visited(g.num_vertices(), false);
  for (VertexId base : g.vertex_ids()) {
    visited[base.index] = true;
    extend_cycles(g, base, base, stack, visited, out);
    visited[base.index] = false;
  }
  return out;
}

bool condition_L(const DirectedGraph& g) {
  // A cycle without exits is forced at every step, so it is a power of a
  // simple exitless cycle; checking simple cycles suffices.
  for (const auto& c : enumerate_simple_cycles(g)) {
    if (!c.has_exit) return false;
  }
  return true;
}

std::vector<VertexId> exitless_base_points(const DirectedGraph& g) {
  std::vector<VertexId> out;
  std::vector<int> count(g.num_vertices(), 0);
  for (const auto& c : enumerate_simple_cycles(g)) {
    if (c.has_exit) continue;
    if (++count[c.base.index] > 1) {
      throw Error(ErrorKind::NonUniqueSimpleCycle,
                  "two exitless simple cycles based at '" + g.vertex_name(c.base) + "'");
    }
  }
  for (VertexId v : g.vertex_ids()) {
    if (count[v.index] > 0) out.push_back(v);
  }
  return out;
}

Path exitless_cycle_at(const DirectedGraph& g, VertexId w) {
  if (!g.contains(w)) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  std::optional<Path> found;
  for (auto& c : enumerate_simple_cycles(g)) {
    if (c.has_exit || c.base != w) continue;
    if (found) {
      throw Error(ErrorKind::NonUniqueSimpleCycle,
                  "two exitless simple cycles based at '" + g.vertex_name(w) + "'");
    }
    found = std::move(c.path);
  }
  if (!found) {
    throw Error(ErrorKind::NotABasePoint,
                "'" + g.vertex_name(w) + "' is not the base point of an exitless cycle");
  }
  return *found;
}

std::vector<EdgeId> exitless_cycle_edges(const DirectedGraph& g) {
  std::vector<bool> on_cycle(g.num_edges(), false);
  for (const auto& c : enumerate_simple_cycles(g)) {
    if (c.has_exit) continue;
    for (EdgeId e : c.path.edges()) on_cycle[e.index] = true;
  }
  std::vector<EdgeId> out;
  for (EdgeId e : g.edge_ids()) {
    if (on_cycle[e.index]) out.push_back(e);
  }
  return out;
}

}  // namespace gbs
