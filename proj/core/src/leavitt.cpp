#include "gbs/leavitt.hpp"

#include <cctype>

#include "gbs/error.hpp"

namespace gbs {

GeneralizedPath GeneralizedPath::vertex(VertexId v) { return GeneralizedPath(v, v, {}); }

GeneralizedPath GeneralizedPath::path(const Path& p) {
  return GeneralizedPath(p.source(), p.range(), std::vector<EdgeId>(p.edges().begin(), p.edges().end()));
}

std::optional<GeneralizedPath> GeneralizedPath::then(const GeneralizedPath& tail) const {
  if (range_ != tail.source_) return std::nullopt;
  if (is_vertex()) return tail;
  if (tail.is_vertex()) return *this;
  std::vector<EdgeId> edges = edges_;
  edges.insert(edges.end(), tail.edges_.begin(), tail.edges_.end());
  return GeneralizedPath(source_, tail.range_, std::move(edges));
}

std::optional<GeneralizedPath> GeneralizedPath::strip_prefix(const GeneralizedPath& prefix) const {
  if (source_ != prefix.source_) return std::nullopt;
  if (prefix.is_vertex()) return *this;
  if (prefix.length() > length()) return std::nullopt;
  if (!std::equal(prefix.edges_.begin(), prefix.edges_.end(), edges_.begin())) return std::nullopt;
  if (prefix.length() == length()) return vertex(range_);
  return GeneralizedPath(prefix.range_, range_,
                         std::vector<EdgeId>(edges_.begin() + static_cast<long>(prefix.length()), edges_.end()));
}

std::string GeneralizedPath::to_string(const DirectedGraph& g) const {
  if (is_vertex()) return g.vertex_name(source_);
  std::string out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += '.';
    out += g.edge_name(edges_[i]);
  }
  return out;
}

// LeavittTerm

LeavittTerm::LeavittTerm(std::shared_ptr<const DirectedGraph> graph) : graph_(std::move(graph)) {
  if (!graph_) throw Error(ErrorKind::Internal, "term needs a graph");
}

LeavittTerm LeavittTerm::monomial(std::shared_ptr<const DirectedGraph> graph, GeneralizedPath nu,
                                  GeneralizedPath mu, Rational c) {
  if (nu.range() != mu.range()) {
    throw Error(ErrorKind::RangeMismatch, "monomial nu mu^* needs r(nu) = r(mu)");
  }
  LeavittTerm t(std::move(graph));
  t.add({std::move(nu), std::move(mu)}, c);
  return t;
}

LeavittTerm LeavittTerm::vertex(std::shared_ptr<const DirectedGraph> graph, VertexId v) {
  if (!graph->contains(v)) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  return monomial(std::move(graph), GeneralizedPath::vertex(v), GeneralizedPath::vertex(v));
}

LeavittTerm LeavittTerm::path(std::shared_ptr<const DirectedGraph> graph, const Path& p) {
  return monomial(std::move(graph), GeneralizedPath::path(p), GeneralizedPath::vertex(p.range()));
}

LeavittTerm LeavittTerm::path_adjoint(std::shared_ptr<const DirectedGraph> graph, const Path& p) {
  return monomial(std::move(graph), GeneralizedPath::vertex(p.range()), GeneralizedPath::path(p));
}

void LeavittTerm::add(const Key& key, Rational c) {
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = summands_.try_emplace(key, std::move(c));
  if (!inserted) {
    it->second += c;
    if (it->second == 0) summands_.erase(it);
  }
}

namespace {

void require_same_graph(const DirectedGraph& a, const DirectedGraph& b) {
  if (&a != &b && !(a == b)) throw Error(ErrorKind::GraphMismatch, "terms belong to different graphs");
}

}  // namespace

LeavittTerm LeavittTerm::operator-() const {
  LeavittTerm out = *this;
  for (auto& [k, c] : out.summands_) c = -c;
  return out;
}

LeavittTerm& LeavittTerm::operator+=(const LeavittTerm& y) {
  require_same_graph(*graph_, *y.graph_);
  for (const auto& [k, c] : y.summands_) add(k, c);
  return *this;
}

LeavittTerm& LeavittTerm::operator-=(const LeavittTerm& y) {
  require_same_graph(*graph_, *y.graph_);
  for (const auto& [k, c] : y.summands_) add(k, -c);
  return *this;
}

LeavittTerm operator*(const Rational& c, const LeavittTerm& x) {
  LeavittTerm out(x.graph_);
  for (const auto& [k, v] : x.summands_) out.add(k, c * v);
  return out;
}

LeavittTerm operator*(const LeavittTerm& x, const LeavittTerm& y) {
  require_same_graph(*x.graph_, *y.graph_);
  LeavittTerm out(x.graph_);
  for (const auto& [kx, cx] : x.summands_) {
    const auto& [nu, mu] = kx;
    for (const auto& [ky, cy] : y.summands_) {
      const auto& [gamma, delta] = ky;
      if (auto kappa = gamma.strip_prefix(mu)) {
        out.add({*nu.then(*kappa), delta}, cx * cy);
      } else if (auto rest = mu.strip_prefix(gamma)) {
        out.add({nu, *delta.then(*rest)}, cx * cy);
      }
    }
  }
  return out;
}

bool operator==(const LeavittTerm& x, const LeavittTerm& y) {
  return (x.graph_ == y.graph_ || *x.graph_ == *y.graph_) && x.summands_ == y.summands_;
}

std::string LeavittTerm::to_string() const {
  if (summands_.empty()) return "0";
  const DirectedGraph& g = *graph_;
  std::string out;
  bool first = true;
  for (const auto& [key, c] : summands_) {
    const auto& [nu, mu] = key;
    const bool negative = c < 0;
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) out += gbs::to_string(mag) + "*";
    if (nu.is_vertex() && mu.is_vertex()) {
      out += "p[" + nu.to_string(g) + "]";
    } else if (mu.is_vertex()) {
      out += "s[" + nu.to_string(g) + "]";
    } else if (nu.is_vertex()) {
      out += "s[" + mu.to_string(g) + "]^";
    } else {
      out += "s[" + nu.to_string(g) + "]*s[" + mu.to_string(g) + "]^";
    }
  }
  return out;
}

LeavittTerm term_mul(const LeavittTerm& x, const LeavittTerm& y) { return x * y; }

LeavittTerm ck2_expand(const LeavittTerm& t, VertexId v) {
  const DirectedGraph& g = t.graph();
  const auto out = g.out_edges(v);
  if (out.empty()) {
    throw Error(ErrorKind::SinkOrInfiniteEmitter,
                "'" + g.vertex_name(v) + "' is a sink; p_v has no edge expansion");
  }
  const LeavittTerm::Key vv{GeneralizedPath::vertex(v), GeneralizedPath::vertex(v)};
  auto it = t.summands().find(vv);
  if (it == t.summands().end()) return t;
  const Rational c = it->second;
  LeavittTerm result = t - c * LeavittTerm::vertex(t.graph_ptr(), v);
  for (EdgeId e : out) {
    const auto ee = GeneralizedPath::path(Path(g, {e}));
    result += LeavittTerm::monomial(t.graph_ptr(), ee, ee, c);
  }
  return result;
}

CanonicalOperator evaluate(const LeavittTerm& t, const BranchingSystem& bs, Mode mode) {
  require_same_graph(t.graph(), bs.graph());
  const DirectedGraph& g = bs.graph();
  CanonicalOperator out;
  for (const auto& [key, c] : t.summands()) {
    const auto& [nu, mu] = key;
    const CanonicalOperator left =
        nu.is_vertex() ? op_vertex(bs, nu.source()) : op_path(bs, nu.as_path(g), mode);
    const CanonicalOperator right =
        mu.is_vertex() ? op_vertex(bs, mu.source()) : op_path_adjoint(bs, mu.as_path(g), mode);
    out = out + RadCoeff(c) * (left * right);
  }
  return out;
}

KernelCheck is_in_kernel(const LeavittTerm& t, const BranchingSystem& bs, Mode mode) {
  const auto op = evaluate(t, bs, mode);
  if (op.is_zero()) return {true, std::nullopt};
  return {false, distinguishing_function(op)};
}

// Parser

namespace {

class TermParser {
 public:
  TermParser(std::shared_ptr<const DirectedGraph> graph, std::string_view text)
      : graph_(std::move(graph)), text_(text) {}

  LeavittTerm parse() {
    LeavittTerm total(graph_);
    skip_space();
    if (at_end()) fail("empty term");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      LeavittTerm s = summand();
      total += negative ? -s : s;
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return total;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, "term literal, column " + std::to_string(pos_ + 1) + ": " + what);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  struct Factor {
    LeavittTerm term;
    bool plain_path = false;  // s[nu]
    bool adjoint_path = false;  // s[mu]^
    VertexId range;
  };

  LeavittTerm summand() {
    skip_space();
    Rational coefficient = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = number();
      skip_space();
      if (at_end() || peek() == '+' || peek() == '-') {
        if (coefficient == 0) return LeavittTerm(graph_);
        fail("a bare scalar is only allowed as 0");
      }
      expect('*');
    }
    Factor current = factor();
    LeavittTerm product = current.term;
    while (true) {
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
      Factor next = factor();
      if (current.plain_path && next.adjoint_path && current.range != next.range) {
        throw Error(ErrorKind::RangeMismatch, "term literal, column " + std::to_string(pos_) +
                                                  ": s[nu]*s[mu]^ needs r(nu) = r(mu)");
      }
      product = product * next.term;
      current = std::move(next);
    }
    return coefficient * product;
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    return parse_rational(text_.substr(start, pos_ - start));
  }

  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && peek() != '.' && peek() != ']' && peek() != '[' &&
           !std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (start == pos_) fail("expected an id");
    return std::string(text_.substr(start, pos_ - start));
  }

  Factor factor() {
    skip_space();
    if (at_end()) fail("expected s[...] or p[...]");
    const char kind = peek();
    if (kind != 's' && kind != 'p') fail("expected s[...] or p[...]");
    ++pos_;
    expect('[');
    if (kind == 'p') {
      const std::string v = name();
      expect(']');
      const auto id = graph_->find_vertex(v);
      if (!id) fail("unknown vertex '" + v + "'");
      return {LeavittTerm::vertex(graph_, *id), false, false, *id};
    }
    std::vector<EdgeId> edges;
    while (true) {
      const std::string e = name();
      const auto id = graph_->find_edge(e);
      if (!id) fail("unknown edge '" + e + "'");
      edges.push_back(*id);
      skip_space();
      if (!at_end() && peek() == '.') {
        ++pos_;
        continue;
      }
      break;
    }
    expect(']');
    if (!graph_->is_path(edges)) fail("edges do not form a path");
    const Path p(*graph_, std::move(edges));
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      return {LeavittTerm::path_adjoint(graph_, p), false, true, p.range()};
    }
    return {LeavittTerm::path(graph_, p), true, false, p.range()};
  }

  std::shared_ptr<const DirectedGraph> graph_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LeavittTerm parse_term(std::shared_ptr<const DirectedGraph> graph, std::string_view text) {
  return TermParser(std::move(graph), text).parse();
}

}  // namespace gbs
