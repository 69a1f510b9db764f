#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gbs/interval.hpp"
#include "gbs/scalar.hpp"

namespace gbs {

/// x -> slope * x + offset with slope > 0.
struct Affine {
  Rational slope{1};
  QuadScalar offset;

  static Affine identity() { return {}; }

  QuadScalar operator()(const QuadScalar& x) const { return QuadScalar(slope) * x + offset; }
  Affine inverse() const;
  /// (*this) after inner: x -> (*this)(inner(x)).
  Affine after(const Affine& inner) const;
  Interval image(const Interval& i) const { return {(*this)(i.lo), (*this)(i.hi)}; }
  Interval preimage(const Interval& i) const { return inverse().image(i); }
  bool is_identity() const { return slope == 1 && offset.is_zero(); }

  friend bool operator==(const Affine& x, const Affine& y) {
    return x.slope == y.slope && x.offset == y.offset;
  }
  friend std::strong_ordering operator<=>(const Affine& x, const Affine& y);
};

struct AffineBranch {
  Interval source;
  Affine map;

  Interval image() const { return map.image(source); }
  friend bool operator==(const AffineBranch&, const AffineBranch&) = default;
};

/// Injective, orientation-preserving map made of finitely many affine
/// branches on disjoint half-open source intervals. Stored canonically:
/// branches sorted by source, and touching branches carrying the same affine
/// map merged, so equality of maps is equality of branch lists.
class PiecewiseAffineMap {
 public:
  PiecewiseAffineMap() = default;
  /// Throws InvalidMap on non-positive slopes, overlapping sources or
  /// overlapping images.
  explicit PiecewiseAffineMap(std::vector<AffineBranch> branches);
  static PiecewiseAffineMap identity(const IntervalSet& domain);

  const std::vector<AffineBranch>& branches() const noexcept { return branches_; }
  bool empty() const noexcept { return branches_.empty(); }

  IntervalSet domain() const;
  IntervalSet codomain() const;

  bool defined_at(const QuadScalar& x) const;
  /// Throws InvalidMap outside the domain.
  QuadScalar operator()(const QuadScalar& x) const;
  /// Slope of the branch containing x (the derivative there).
  const Rational& slope_at(const QuadScalar& x) const;

  PiecewiseAffineMap inverse() const;
  /// Restriction to domain ∩ s.
  PiecewiseAffineMap restrict_to(const IntervalSet& s) const;
  /// f(s ∩ domain).
  IntervalSet image(const IntervalSet& s) const;
  /// f^{-1}(s).
  IntervalSet preimage(const IntervalSet& s) const;

  /// Every branch has slope 1 and offset 0.
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const PiecewiseAffineMap&, const PiecewiseAffineMap&) = default;

 private:
  struct Trusted {};
  PiecewiseAffineMap(Trusted, std::vector<AffineBranch> branches);
  void canonicalize();

  std::vector<AffineBranch> branches_;
};

/// outer ∘ inner on inner^{-1}(domain(outer)), canonicalized.
PiecewiseAffineMap compose(const PiecewiseAffineMap& outer, const PiecewiseAffineMap& inner);

}  // namespace gbs
