#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbs/graph.hpp"
#include "gbs/representation.hpp"
#include "gbs/scalar.hpp"

namespace gbs {

/// A path, or a vertex read as a path of length zero with s(v) = r(v) = v.
class GeneralizedPath {
 public:
  static GeneralizedPath vertex(VertexId v);
  static GeneralizedPath path(const Path& p);

  bool is_vertex() const noexcept { return edges_.empty(); }
  VertexId source() const noexcept { return source_; }
  VertexId range() const noexcept { return range_; }
  std::span<const EdgeId> edges() const noexcept { return edges_; }
  std::size_t length() const noexcept { return edges_.size(); }
  /// For length >= 1.
  Path as_path(const DirectedGraph& g) const { return Path(g, edges_); }

  /// Concatenation; nullopt when r(*this) != s(tail).
  std::optional<GeneralizedPath> then(const GeneralizedPath& tail) const;
  /// If *this = prefix · rest, returns rest.
  std::optional<GeneralizedPath> strip_prefix(const GeneralizedPath& prefix) const;

  std::string to_string(const DirectedGraph& g) const;

  friend auto operator<=>(const GeneralizedPath&, const GeneralizedPath&) = default;

 private:
  GeneralizedPath(VertexId s, VertexId r, std::vector<EdgeId> edges)
      : source_(s), range_(r), edges_(std::move(edges)) {}

  VertexId source_;
  VertexId range_;
  std::vector<EdgeId> edges_;
};

/// Finite K-linear combination (K = Q) of monomials nu mu^* with r(nu) = r(mu):
/// the standard spanning set of the graph algebra.
class LeavittTerm {
 public:
  using Key = std::pair<GeneralizedPath, GeneralizedPath>;  // (nu, mu) for nu mu^*

  explicit LeavittTerm(std::shared_ptr<const DirectedGraph> graph);

  /// c * nu mu^*. Throws RangeMismatch unless r(nu) = r(mu).
  static LeavittTerm monomial(std::shared_ptr<const DirectedGraph> graph, GeneralizedPath nu,
                              GeneralizedPath mu, Rational c = 1);
  static LeavittTerm vertex(std::shared_ptr<const DirectedGraph> graph, VertexId v);
  /// s_alpha.
  static LeavittTerm path(std::shared_ptr<const DirectedGraph> graph, const Path& p);
  /// s_alpha^*.
  static LeavittTerm path_adjoint(std::shared_ptr<const DirectedGraph> graph, const Path& p);

  const DirectedGraph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const DirectedGraph>& graph_ptr() const noexcept { return graph_; }
  const std::map<Key, Rational>& summands() const noexcept { return summands_; }
  bool is_zero() const noexcept { return summands_.empty(); }

  LeavittTerm operator-() const;
  LeavittTerm& operator+=(const LeavittTerm& y);
  LeavittTerm& operator-=(const LeavittTerm& y);
  friend LeavittTerm operator+(LeavittTerm x, const LeavittTerm& y) { return x += y; }
  friend LeavittTerm operator-(LeavittTerm x, const LeavittTerm& y) { return x -= y; }
  friend LeavittTerm operator*(const Rational& c, const LeavittTerm& x);
  /// Algebra product; see term_mul.
  friend LeavittTerm operator*(const LeavittTerm& x, const LeavittTerm& y);
  friend bool operator==(const LeavittTerm& x, const LeavittTerm& y);

  /// Literal syntax, e.g. "s[e1.e2]*s[f1]^ + 2/3*p[v]".
  std::string to_string() const;

 private:
  void add(const Key& key, Rational c);

  std::shared_ptr<const DirectedGraph> graph_;
  std::map<Key, Rational> summands_;
};

/// Bilinear extension of (nu mu^*)(gamma delta^*) = (nu kappa) delta^* if
/// gamma = mu kappa, nu (delta kappa)^* if mu = gamma kappa, and 0 otherwise.
/// Throws GraphMismatch.
LeavittTerm term_mul(const LeavittTerm& x, const LeavittTerm& y);

/// Replaces the summand p_v by sum_{s(e)=v} e e^*. Throws SinkOrInfiniteEmitter.
LeavittTerm ck2_expand(const LeavittTerm& t, VertexId v);

/// pi(t) = sum c pi(s_nu) pi(s_mu)^*. Throws GraphMismatch.
CanonicalOperator evaluate(const LeavittTerm& t, const BranchingSystem& bs, Mode mode);

struct KernelCheck {
  bool in_kernel = false;
  /// phi with pi(t) phi != 0 when not in the kernel.
  std::optional<StepFunction> witness;
};

KernelCheck is_in_kernel(const LeavittTerm& t, const BranchingSystem& bs, Mode mode);

/// Parses the literal syntax:
///   term    := summand (('+' | '-') summand)*
///   summand := [rational '*'] factor ('*' factor)*
///   factor  := 's[' edge ('.' edge)* ']' ['^'] | 'p[' vertex ']'
/// with factors multiplied through term_mul. A factor s[nu] immediately
/// followed by s[mu]^ must satisfy r(nu) = r(mu) (RangeMismatch otherwise).
/// Throws ParseError with the offending column.
LeavittTerm parse_term(std::shared_ptr<const DirectedGraph> graph, std::string_view text);

}  // namespace gbs
