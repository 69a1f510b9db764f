#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbs/scalar.hpp"

namespace gbs {

/// Half-open interval [lo, hi).
struct Interval {
  QuadScalar lo;
  QuadScalar hi;

  bool empty() const { return !(lo < hi); }
  QuadScalar length() const { return hi - lo; }
  bool contains(const QuadScalar& x) const { return lo <= x && x < hi; }
  QuadScalar midpoint() const { return (lo + hi) / QuadScalar(2); }
  std::string to_string() const { return "[" + lo.to_string() + ", " + hi.to_string() + ")"; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Nonempty intersection, if any.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Finite union of half-open intervals, stored canonically: sorted, nonempty,
/// pairwise disjoint and non-touching (touching pieces are merged). Two sets
/// are equal iff their piece lists are equal, which makes Lebesgue-a.e.
/// statements about these sets exact.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(Interval piece);
  /// Union of arbitrary (possibly overlapping or empty) intervals.
  static IntervalSet from_pieces(std::vector<Interval> pieces);

  const std::vector<Interval>& pieces() const noexcept { return pieces_; }
  bool empty() const noexcept { return pieces_.empty(); }
  /// Lebesgue measure.
  QuadScalar measure() const;
  bool contains(const QuadScalar& x) const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet subtract(const IntervalSet& other) const;
  bool is_subset_of(const IntervalSet& other) const;
  bool is_disjoint_from(const IntervalSet& other) const;

  std::string to_string() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> pieces_;
};

}  // namespace gbs
