#include "gbs/canonical_operator.hpp"

#include <algorithm>
#include <deque>

#include "gbs/error.hpp"

namespace gbs {

namespace {

using GroupPieces = std::map<Affine, std::vector<StepPiece>>;

std::map<Affine, StepFunction> finish(GroupPieces pending) {
  std::map<Affine, StepFunction> out;
  for (auto& [g, pieces] : pending) {
    auto w = StepFunction::from_pieces(std::move(pieces));
    if (!w.is_zero()) out.emplace(g, std::move(w));
  }
  return out;
}

}  // namespace

CanonicalOperator CanonicalOperator::multiplication(const IntervalSet& s) {
  CanonicalOperator out;
  auto w = StepFunction::indicator(s);
  if (!w.is_zero()) out.groups_.emplace(Affine::identity(), std::move(w));
  return out;
}

CanonicalOperator CanonicalOperator::from_terms(const std::vector<OperatorTerm>& terms) {
  GroupPieces pending;
  for (const auto& t : terms) pending[t.pullback].push_back({t.target, t.weight});
  CanonicalOperator out;
  out.groups_ = finish(std::move(pending));
  return out;
}

std::vector<OperatorTerm> CanonicalOperator::terms() const {
  std::vector<OperatorTerm> out;
  for (const auto& [g, w] : groups_) {
    for (const auto& p : w.pieces()) out.push_back({p.support, g, p.value});
  }
  std::stable_sort(out.begin(), out.end(), [](const OperatorTerm& a, const OperatorTerm& b) {
    if (a.target.lo != b.target.lo) return a.target.lo < b.target.lo;
    return a.pullback < b.pullback;
  });
  return out;
}

IntervalSet CanonicalOperator::target_support() const {
  std::vector<Interval> pieces;
  for (const auto& [g, w] : groups_) {
    for (const auto& p : w.pieces()) pieces.push_back(p.support);
  }
  return IntervalSet::from_pieces(std::move(pieces));
}

bool CanonicalOperator::is_multiplication(IntervalSet* s) const {
  if (groups_.empty()) {
    if (s) *s = IntervalSet();
    return true;
  }
  if (groups_.size() != 1 || !groups_.begin()->first.is_identity()) return false;
  const auto& w = groups_.begin()->second;
  for (const auto& p : w.pieces()) {
    if (!(p.value == RadCoeff(1))) return false;
  }
  if (s) *s = w.support();
  return true;
}

StepFunction CanonicalOperator::apply(const StepFunction& phi) const {
  std::vector<StepPiece> out;
  for (const auto& [g, w] : groups_) {
    const Affine back = g.inverse();
    for (const auto& wp : w.pieces()) {
      for (const auto& fp : phi.pieces()) {
        // x in target with g(x) in the support of this piece of phi.
        if (auto k = intersect(wp.support, back.image(fp.support))) {
          out.push_back({*k, wp.value * fp.value});
        }
      }
    }
  }
  return StepFunction::from_pieces(std::move(out));
}

CanonicalOperator CanonicalOperator::operator-() const {
  CanonicalOperator out = *this;
  for (auto& [g, w] : out.groups_) w = -w;
  return out;
}

CanonicalOperator operator+(const CanonicalOperator& x, const CanonicalOperator& y) {
  CanonicalOperator out = x;
  for (const auto& [g, w] : y.groups_) {
    auto it = out.groups_.find(g);
    if (it == out.groups_.end()) {
      out.groups_.emplace(g, w);
      continue;
    }
    it->second = it->second + w;
    if (it->second.is_zero()) out.groups_.erase(it);
  }
  return out;
}

CanonicalOperator operator-(const CanonicalOperator& x, const CanonicalOperator& y) {
  return x + (-y);
}

CanonicalOperator operator*(const RadCoeff& c, const CanonicalOperator& x) {
  if (c.is_zero()) return {};
  CanonicalOperator out = x;
  for (auto& [g, w] : out.groups_) w = c * w;
  return out;
}

CanonicalOperator operator*(const CanonicalOperator& x, const CanonicalOperator& y) {
  // x(y(phi))(t) = sum_i w_i(t) sum_j w_j(g_i t) phi(g_j(g_i t)).
  GroupPieces pending;
  for (const auto& [gi, wi] : x.groups_) {
    const Affine back = gi.inverse();
    for (const auto& [gj, wj] : y.groups_) {
      const Affine combined = gj.after(gi);
      for (const auto& pi : wi.pieces()) {
        for (const auto& pj : wj.pieces()) {
          if (auto k = intersect(pi.support, back.image(pj.support))) {
            pending[combined].push_back({*k, pi.value * pj.value});
          }
        }
      }
    }
  }
  CanonicalOperator out;
  out.groups_ = finish(std::move(pending));
  return out;
}

std::string CanonicalOperator::to_string() const {
  if (groups_.empty()) return "0";
  std::string out;
  for (const auto& t : terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + t.weight.to_string() + ")*chi" + t.target.to_string() + "*phi(" +
           gbs::to_string(t.pullback.slope) + "*x + " + t.pullback.offset.to_string() + ")";
  }
  return out;
}

std::optional<StepFunction> distinguishing_function(const CanonicalOperator& x) {
  if (x.is_zero()) return std::nullopt;
  auto nonzero = [&](const Interval& i) {
    auto phi = StepFunction::indicator(i);
    return x.apply(phi).is_zero() ? std::nullopt : std::optional<StepFunction>(std::move(phi));
  };
  const auto terms = x.terms();
  for (const auto& t : terms) {
    if (auto phi = nonzero(t.target)) return phi;
  }
  // Shrinking a target piece eventually separates its pullback image from
  // those of all other pullbacks, so bisection terminates in principle.
  constexpr int kMaxDepth = 24;
  for (const auto& t : terms) {
    std::deque<std::pair<Interval, int>> queue{{t.target, 0}};
    while (!queue.empty()) {
      auto [piece, depth] = queue.front();
      queue.pop_front();
      if (auto phi = nonzero(t.pullback.image(piece))) return phi;
      if (depth == kMaxDepth) continue;
      const QuadScalar mid = piece.midpoint();
      queue.push_back({Interval{piece.lo, mid}, depth + 1});
      queue.push_back({Interval{mid, piece.hi}, depth + 1});
      if (queue.size() > 4096) queue.resize(4096);
    }
  }
  throw Error(ErrorKind::Internal, "no distinguishing step function found for nonzero operator");
}

}  // namespace gbs
