#pragma once

#include <string>
#include <vector>

#include "gbs/interval.hpp"
#include "gbs/radical.hpp"

namespace gbs {

struct StepPiece {
  Interval support;
  RadCoeff value;
  friend bool operator==(const StepPiece&, const StepPiece&) = default;
};

/// Finitely supported piecewise-constant function on the line with exact
/// breakpoints and radical coefficients. Canonical: pieces sorted, disjoint,
/// nonzero, and touching pieces with equal values merged.
class StepFunction {
 public:
  StepFunction() = default;
  static StepFunction indicator(const Interval& i);
  static StepFunction indicator(const IntervalSet& s);
  /// Pointwise sum of the given (possibly overlapping) pieces.
  static StepFunction from_pieces(std::vector<StepPiece> pieces);

  const std::vector<StepPiece>& pieces() const noexcept { return pieces_; }
  bool is_zero() const noexcept { return pieces_.empty(); }
  RadCoeff value_at(const QuadScalar& x) const;
  IntervalSet support() const;

  StepFunction operator-() const;
  friend StepFunction operator+(const StepFunction& x, const StepFunction& y);
  friend StepFunction operator-(const StepFunction& x, const StepFunction& y) { return x + (-y); }
  friend StepFunction operator*(const RadCoeff& c, const StepFunction& x);
  friend bool operator==(const StepFunction&, const StepFunction&) = default;

  std::string to_string() const;

 private:
  std::vector<StepPiece> pieces_;
};

/// L^2 inner product, exact.
RadCoeff inner_product(const StepFunction& f, const StepFunction& g);

}  // namespace gbs
