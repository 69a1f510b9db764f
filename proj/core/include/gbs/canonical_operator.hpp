#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbs/affine_map.hpp"
#include "gbs/step_function.hpp"

namespace gbs {

/// One summand  phi -> weight * chi_target * (phi ∘ pullback).
struct OperatorTerm {
  Interval target;
  Affine pullback;
  RadCoeff weight;
};

/// Weighted composition operator on step functions,
///
///   (X phi)(x) = sum_k w_k(x) phi(g_k(x)),
///
/// with finitely many distinct affine pullbacks g_k and step-function weights
/// w_k. Stored as a map from pullback to (canonical, nonzero) weight function.
/// Distinct pullbacks with nonzero weights can always be separated by a step
/// function, so two operators are equal iff their canonical forms are equal.
class CanonicalOperator {
 public:
  CanonicalOperator() = default;
  static CanonicalOperator zero() { return {}; }
  /// phi -> chi_s * phi.
  static CanonicalOperator multiplication(const IntervalSet& s);
  static CanonicalOperator from_terms(const std::vector<OperatorTerm>& terms);

  const std::map<Affine, StepFunction>& groups() const noexcept { return groups_; }
  /// Flattened canonical terms ordered by target interval, then pullback.
  std::vector<OperatorTerm> terms() const;
  bool is_zero() const noexcept { return groups_.empty(); }

  /// Union of the supports of all weight functions.
  IntervalSet target_support() const;
  /// True iff this is phi -> chi_s phi for some s; sets *s when given.
  bool is_multiplication(IntervalSet* s = nullptr) const;

  StepFunction apply(const StepFunction& phi) const;

  CanonicalOperator operator-() const;
  friend CanonicalOperator operator+(const CanonicalOperator& x, const CanonicalOperator& y);
  friend CanonicalOperator operator-(const CanonicalOperator& x, const CanonicalOperator& y);
  friend CanonicalOperator operator*(const RadCoeff& c, const CanonicalOperator& x);
  /// Composition: (x * y)(phi) = x(y(phi)).
  friend CanonicalOperator operator*(const CanonicalOperator& x, const CanonicalOperator& y);
  friend bool operator==(const CanonicalOperator&, const CanonicalOperator&) = default;

  std::string to_string() const;

 private:
  std::map<Affine, StepFunction> groups_;
};

inline CanonicalOperator op_add(const CanonicalOperator& x, const CanonicalOperator& y) { return x + y; }
inline CanonicalOperator op_sub(const CanonicalOperator& x, const CanonicalOperator& y) { return x - y; }
inline CanonicalOperator op_scale(const RadCoeff& c, const CanonicalOperator& x) { return c * x; }
inline CanonicalOperator op_compose(const CanonicalOperator& x, const CanonicalOperator& y) { return x * y; }
inline StepFunction apply(const CanonicalOperator& x, const StepFunction& phi) { return x.apply(phi); }

/// A step function phi with x(phi) != 0, or nullopt when x is zero. Candidates
/// are indicators of canonical target intervals and of their pullback images,
/// refined by bisection; every candidate is confirmed by applying x.
std::optional<StepFunction> distinguishing_function(const CanonicalOperator& x);

}  // namespace gbs
