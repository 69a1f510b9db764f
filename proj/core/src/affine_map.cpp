#include "gbs/affine_map.hpp"

#include <algorithm>

#include "gbs/error.hpp"

namespace gbs {

Affine Affine::inverse() const {
  const Rational inv = Rational(1) / slope;
  return {inv, -(QuadScalar(inv) * offset)};
}

Affine Affine::after(const Affine& inner) const {
  return {slope * inner.slope, QuadScalar(slope) * inner.offset + offset};
}

std::strong_ordering operator<=>(const Affine& x, const Affine& y) {
  if (const int c = cmp(x.slope, y.slope); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return x.offset <=> y.offset;
}

PiecewiseAffineMap::PiecewiseAffineMap(Trusted, std::vector<AffineBranch> branches)
    : branches_(std::move(branches)) {
  canonicalize();
}

PiecewiseAffineMap::PiecewiseAffineMap(std::vector<AffineBranch> branches)
    : branches_(std::move(branches)) {
  for (auto& b : branches_) {
    b.map.slope.canonicalize();
    if (b.map.slope <= 0) throw Error(ErrorKind::InvalidMap, "branch slopes must be positive");
    if (b.source.empty()) throw Error(ErrorKind::InvalidMap, "branch source must be nonempty");
  }
  canonicalize();
  for (std::size_t i = 0; i + 1 < branches_.size(); ++i) {
    if (branches_[i + 1].source.lo < branches_[i].source.hi) {
      throw Error(ErrorKind::InvalidMap,
                  "overlapping branch sources at " + branches_[i + 1].source.lo.to_string());
    }
  }
  std::vector<Interval> images;
  images.reserve(branches_.size());
  for (const auto& b : branches_) images.push_back(b.image());
  std::sort(images.begin(), images.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (std::size_t i = 0; i + 1 < images.size(); ++i) {
    if (images[i + 1].lo < images[i].hi) {
      throw Error(ErrorKind::InvalidMap,
                  "map is not injective near " + images[i + 1].lo.to_string());
    }
  }
}

void PiecewiseAffineMap::canonicalize() {
  std::sort(branches_.begin(), branches_.end(), [](const AffineBranch& x, const AffineBranch& y) {
    return x.source.lo < y.source.lo;
  });
  std::vector<AffineBranch> merged;
  merged.reserve(branches_.size());
  for (auto& b : branches_) {
    if (!merged.empty() && merged.back().source.hi == b.source.lo && merged.back().map == b.map) {
      merged.back().source.hi = std::move(b.source.hi);
    } else {
      merged.push_back(std::move(b));
    }
  }
  branches_ = std::move(merged);
}

PiecewiseAffineMap PiecewiseAffineMap::identity(const IntervalSet& domain) {
  std::vector<AffineBranch> branches;
  for (const auto& p : domain.pieces()) branches.push_back({p, Affine::identity()});
  return PiecewiseAffineMap(Trusted{}, std::move(branches));
}

IntervalSet PiecewiseAffineMap::domain() const {
  std::vector<Interval> pieces;
  for (const auto& b : branches_) pieces.push_back(b.source);
  return IntervalSet::from_pieces(std::move(pieces));
}

IntervalSet PiecewiseAffineMap::codomain() const {
  std::vector<Interval> pieces;
  for (const auto& b : branches_) pieces.push_back(b.image());
  return IntervalSet::from_pieces(std::move(pieces));
}

namespace {

const AffineBranch* branch_at(const std::vector<AffineBranch>& branches, const QuadScalar& x) {
  auto it = std::upper_bound(branches.begin(), branches.end(), x,
                             [](const QuadScalar& v, const AffineBranch& b) { return v < b.source.lo; });
  if (it == branches.begin()) return nullptr;
  --it;
  return it->source.contains(x) ? &*it : nullptr;
}

}  // namespace

bool PiecewiseAffineMap::defined_at(const QuadScalar& x) const {
  return branch_at(branches_, x) != nullptr;
}

QuadScalar PiecewiseAffineMap::operator()(const QuadScalar& x) const {
  const AffineBranch* b = branch_at(branches_, x);
  if (!b) throw Error(ErrorKind::InvalidMap, "point " + x.to_string() + " outside map domain");
  return b->map(x);
}

const Rational& PiecewiseAffineMap::slope_at(const QuadScalar& x) const {
  const AffineBranch* b = branch_at(branches_, x);
  if (!b) throw Error(ErrorKind::InvalidMap, "point " + x.to_string() + " outside map domain");
  return b->map.slope;
}

PiecewiseAffineMap PiecewiseAffineMap::inverse() const {
  std::vector<AffineBranch> branches;
  branches.reserve(branches_.size());
  for (const auto& b : branches_) branches.push_back({b.image(), b.map.inverse()});
  return PiecewiseAffineMap(Trusted{}, std::move(branches));
}

PiecewiseAffineMap PiecewiseAffineMap::restrict_to(const IntervalSet& s) const {
  std::vector<AffineBranch> branches;
  for (const auto& b : branches_) {
    for (const auto& p : s.pieces()) {
      if (auto k = gbs::intersect(b.source, p)) branches.push_back({*k, b.map});
    }
  }
  return PiecewiseAffineMap(Trusted{}, std::move(branches));
}

IntervalSet PiecewiseAffineMap::image(const IntervalSet& s) const {
  std::vector<Interval> pieces;
  for (const auto& b : restrict_to(s).branches_) pieces.push_back(b.image());
  return IntervalSet::from_pieces(std::move(pieces));
}

IntervalSet PiecewiseAffineMap::preimage(const IntervalSet& s) const {
  return inverse().image(s);
}

bool PiecewiseAffineMap::is_identity() const {
  return std::all_of(branches_.begin(), branches_.end(),
                     [](const AffineBranch& b) { return b.map.is_identity(); });
}

std::string PiecewiseAffineMap::to_string() const {
  std::string out;
  for (const auto& b : branches_) {
    if (!out.empty()) out += "; ";
    out += b.source.to_string() + " -> " + gbs::to_string(b.map.slope) + "*x + " +
           b.map.offset.to_string();
  }
  return out.empty() ? "(empty)" : out;
}

PiecewiseAffineMap compose(const PiecewiseAffineMap& outer, const PiecewiseAffineMap& inner) {
  std::vector<AffineBranch> branches;
  for (const auto& in : inner.branches()) {
    const Interval img = in.image();
    for (const auto& out : outer.branches()) {
      if (auto k = intersect(img, out.source)) {
        branches.push_back({in.map.preimage(*k), out.map.after(in.map)});
      }
    }
  }
  // Sub-branches of an injective composition stay disjoint in source and image.
  return PiecewiseAffineMap(std::move(branches));
}

}  // namespace gbs
