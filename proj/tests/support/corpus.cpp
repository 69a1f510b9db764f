#include "corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace gbs::testing {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

Rational random_rational(Rng& rng, long max_num, long max_den) {
  Rational r(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
  r.canonicalize();
  return r;
}

/// Shuffles vertex and edge lists; order is significant to the layout.
DirectedGraph shuffled(std::vector<std::string> vertices, std::vector<EdgeRecord> edges, Rng& rng) {
  std::shuffle(vertices.begin(), vertices.end(), rng);
  std::shuffle(edges.begin(), edges.end(), rng);
  return DirectedGraph(std::move(vertices), std::move(edges));
}

}  // namespace

std::uint64_t suite_seed() {
  if (const char* env = std::getenv("GBS_TEST_SEED")) return std::strtoull(env, nullptr, 10);
  return kDefaultSeed;
}

GraphPtr make_graph(std::vector<std::string> vertices, std::vector<EdgeRecord> edges) {
  return std::make_shared<const DirectedGraph>(std::move(vertices), std::move(edges));
}

GraphPtr single_loop() { return make_graph({"v"}, {{"e", "v", "v"}}); }

GraphPtr two_cycle() { return make_graph({"v", "w"}, {{"e", "v", "w"}, {"f", "w", "v"}}); }

DirectedGraph random_graph(Rng& rng, GraphShape shape) {
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(shape.max_vertices)));
  const std::size_t m = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(shape.max_edges)));
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back({"e" + std::to_string(i), vertices[pick(rng, n)], vertices[pick(rng, n)]});
  }
  return DirectedGraph(std::move(vertices), std::move(edges));
}

DirectedGraph random_non_L_graph(Rng& rng, GraphShape shape) {
  const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 3));
  const std::size_t extra = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(shape.max_vertices - k)));
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < k; ++i) vertices.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < extra; ++i) vertices.push_back("x" + std::to_string(i));
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i < k; ++i) {
    edges.push_back({"a" + std::to_string(i), vertices[i], vertices[(i + 1) % k]});
  }
  if (extra > 0) {
    const std::size_t budget = shape.max_edges - k;
    const std::size_t m = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(budget)));
    for (std::size_t i = 0; i < m; ++i) {
      // Sources avoid the cycle, so the planted cycle stays exitless.
      edges.push_back({"e" + std::to_string(i), vertices[k + pick(rng, extra)], vertices[pick(rng, vertices.size())]});
    }
  }
  return shuffled(std::move(vertices), std::move(edges), rng);
}

std::vector<DirectedGraph> non_L_corpus(Rng& rng, std::size_t count) {
  std::vector<DirectedGraph> out;
  out.push_back(*single_loop());
  out.push_back(*two_cycle());
  out.emplace_back(std::vector<std::string>{"a", "b", "c"},
                   std::vector<EdgeRecord>{{"x", "a", "b"}, {"y", "b", "c"}, {"z", "c", "a"}});
  out.emplace_back(std::vector<std::string>{"u", "v"}, std::vector<EdgeRecord>{{"t", "u", "v"}, {"e", "v", "v"}});
  out.emplace_back(std::vector<std::string>{"u", "v", "w"},
                   std::vector<EdgeRecord>{{"s", "u", "u"}, {"t", "u", "v"}, {"e", "v", "v"}, {"g", "u", "w"}});
  out.emplace_back(std::vector<std::string>{"p", "q"}, std::vector<EdgeRecord>{{"e", "p", "p"}, {"f", "q", "q"}});
  out.emplace_back(std::vector<std::string>{"u", "v", "w"},
                   std::vector<EdgeRecord>{{"t", "u", "v"}, {"e", "v", "w"}, {"f", "w", "v"}, {"s", "u", "u"}});
  while (out.size() < count) out.push_back(random_non_L_graph(rng));
  out.resize(count, out.front());
  return out;
}

QuadScalar random_quad(Rng& rng, std::int64_t d, long max_num, long max_den) {
  const Rational a = random_rational(rng, max_num, max_den);
  const Rational b = uniform(rng, 0, 3) == 0 ? Rational(0) : random_rational(rng, max_num, max_den);
  return QuadScalar(a, b, d);
}

QuadScalar random_angle(Rng& rng, std::int64_t d, bool rational) {
  if (rational) {
    const long q = uniform(rng, 1, 30);
    return QuadScalar(Rational(uniform(rng, 0, q - 1), q));
  }
  Rational b;
  do {
    b = random_rational(rng, 9, 7);
  } while (b == 0);
  return QuadScalar(random_rational(rng, 9, 7), b, d).mod_one();
}

std::map<EdgeId, QuadScalar> random_thetas(const DirectedGraph& g, Rng& rng, std::int64_t d) {
  std::map<EdgeId, QuadScalar> out;
  for (EdgeId e : exitless_cycle_edges(g)) out.emplace(e, random_angle(rng, d, uniform(rng, 0, 1) == 0));
  return out;
}

RadCoeff random_radical(Rng& rng, unsigned max_terms) {
  static const long radicands[] = {1, 2, 3, 5, 6, 7, 10, 12, 18};
  RadCoeff out;
  const long terms = uniform(rng, 1, static_cast<long>(max_terms));
  for (long i = 0; i < terms; ++i) {
    out += RadCoeff::term(random_rational(rng, 12, 9), Integer(radicands[pick(rng, std::size(radicands))]));
  }
  return out;
}

StepFunction random_step_function(Rng& rng, const IntervalSet& support, std::size_t max_pieces, std::int64_t d) {
  if (support.empty()) return {};
  const QuadScalar root = QuadScalar::sqrt(d);
  const QuadScalar shift = (root - QuadScalar(Rational(root.floor()))) / QuadScalar(32);
  const std::size_t count = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_pieces)));
  std::vector<StepPiece> pieces;
  for (std::size_t i = 0; i < count; ++i) {
    const Interval& host = support.pieces()[pick(rng, support.pieces().size())];
    const long a = uniform(rng, 0, 15);
    const long b = uniform(rng, a + 1, 16);
    QuadScalar lo = host.lo + host.length() * QuadScalar(Rational(a, 16));
    QuadScalar hi = host.lo + host.length() * QuadScalar(Rational(b, 16));
    if (uniform(rng, 0, 3) == 0) lo += host.length() * shift;
    if (b < 16 && uniform(rng, 0, 3) == 0) hi += host.length() * shift;
    RadCoeff value;
    do {
      value = random_radical(rng, 2);
    } while (value.is_zero());
    pieces.push_back({Interval{lo, hi}, value});
  }
  return StepFunction::from_pieces(std::move(pieces));
}

std::optional<Path> random_path(const DirectedGraph& g, Rng& rng, std::size_t max_length) {
  if (g.num_edges() == 0) return std::nullopt;
  const std::size_t target = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_length)));
  std::vector<EdgeId> edges{EdgeId{pick(rng, g.num_edges())}};
  while (edges.size() < target) {
    const auto out = g.out_edges(g.range(edges.back()));
    if (out.empty()) break;
    edges.push_back(out[pick(rng, out.size())]);
  }
  return Path(g, std::move(edges));
}

LeavittTerm random_monomial(const GraphPtr& g, Rng& rng, std::size_t max_length) {
  const Rational c(uniform(rng, 1, 5) * (uniform(rng, 0, 1) ? 1 : -1), uniform(rng, 1, 4));
  if (g->num_edges() == 0 || uniform(rng, 0, 5) == 0) {
    return c * LeavittTerm::vertex(g, VertexId{pick(rng, g->num_vertices())});
  }
  auto nu_path = random_path(*g, rng, max_length);
  GeneralizedPath nu = uniform(rng, 0, 4) == 0 ? GeneralizedPath::vertex(nu_path->source())
                                                : GeneralizedPath::path(*nu_path);
  // mu: backward walk ending at r(nu), possibly empty.
  const VertexId end = nu.range();
  const std::size_t len = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_length)));
  std::vector<EdgeId> back;
  VertexId at = end;
  while (back.size() < len) {
    const auto in = g->in_edges(at);
    if (in.empty()) break;
    const EdgeId e = in[pick(rng, in.size())];
    back.push_back(e);
    at = g->source(e);
  }
  std::reverse(back.begin(), back.end());
  GeneralizedPath mu = back.empty() ? GeneralizedPath::vertex(end) : GeneralizedPath::path(Path(*g, back));
  return LeavittTerm::monomial(g, std::move(nu), std::move(mu), c);
}

IntervalSet total_domain(const BranchingSystem& bs) {
  IntervalSet out;
  for (VertexId v : bs.graph().vertex_ids()) out = out.unite(bs.domain_set(v));
  return out;
}

}  // namespace gbs::testing
