#include "gbs/interval.hpp"

#include <algorithm>

namespace gbs {

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Interval out{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  if (out.empty()) return std::nullopt;
  return out;
}

IntervalSet::IntervalSet(Interval piece) {
  if (!piece.empty()) pieces_.push_back(std::move(piece));
}

IntervalSet IntervalSet::from_pieces(std::vector<Interval> pieces) {
  std::erase_if(pieces, [](const Interval& i) { return i.empty(); });
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  IntervalSet out;
  for (auto& p : pieces) {
    if (!out.pieces_.empty() && p.lo <= out.pieces_.back().hi) {
      if (out.pieces_.back().hi < p.hi) out.pieces_.back().hi = std::move(p.hi);
    } else {
      out.pieces_.push_back(std::move(p));
    }
  }
  return out;
}

QuadScalar IntervalSet::measure() const {
  QuadScalar total;
  for (const auto& p : pieces_) total += p.length();
  return total;
}

bool IntervalSet::contains(const QuadScalar& x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const QuadScalar& v, const Interval& p) { return v < p.lo; });
  return it != pieces_.begin() && std::prev(it)->contains(x);
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return from_pieces(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  IntervalSet out;
  std::size_t i = 0, j = 0;
  while (i < pieces_.size() && j < other.pieces_.size()) {
    if (auto k = gbs::intersect(pieces_[i], other.pieces_[j])) out.pieces_.push_back(*k);
    if (pieces_[i].hi < other.pieces_[j].hi) ++i;
    else ++j;
  }
  return out;
}

IntervalSet IntervalSet::subtract(const IntervalSet& other) const {
  IntervalSet out;
  for (const auto& p : pieces_) {
    QuadScalar cursor = p.lo;
    for (const auto& q : other.pieces_) {
      if (!(q.hi > cursor)) continue;
      if (!(q.lo < p.hi)) break;
      if (cursor < q.lo) out.pieces_.push_back({cursor, q.lo});
      cursor = std::max(cursor, q.hi);
      if (!(cursor < p.hi)) break;
    }
    if (cursor < p.hi) out.pieces_.push_back({cursor, p.hi});
  }
  return out;
}

bool IntervalSet::is_subset_of(const IntervalSet& other) const { return subtract(other).empty(); }

bool IntervalSet::is_disjoint_from(const IntervalSet& other) const {
  return intersect(other).empty();
}

std::string IntervalSet::to_string() const {
  if (pieces_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += " u ";
    out += pieces_[i].to_string();
  }
  return out;
}

}  // namespace gbs
