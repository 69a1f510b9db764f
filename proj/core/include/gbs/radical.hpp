#pragma once

#include <map>
#include <string>

#include "gbs/scalar.hpp"

namespace gbs {

/// Splits n > 0 as n = square^2 * core with core squarefree (trial division).
std::pair<Integer, Integer> squarefree_split(const Integer& n);

/// Finite sum  sum_r c_r sqrt(r)  over squarefree positive radicands r, with
/// rational coefficients. Radicand 1 holds the rational part. The
/// representation is canonical (no zero coefficients), so equality is
/// structural.
class RadCoeff {
 public:
  using Terms = std::map<Integer, Rational>;

  RadCoeff() = default;
  RadCoeff(Rational q);  // NOLINT(google-explicit-constructor)
  RadCoeff(long q) : RadCoeff(Rational(q)) {}  // NOLINT(google-explicit-constructor)

  /// c * sqrt(r) for an arbitrary positive integer r (square factors extracted).
  static RadCoeff term(const Rational& c, const Integer& radicand);
  /// sqrt(q) for rational q > 0, normalized as (1/n) sqrt(m n). Throws NonPositiveRadicand.
  static RadCoeff sqrt_of(Rational q);
  /// Embeds a + b sqrt(d).
  static RadCoeff from_quad(const QuadScalar& x);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  /// Coefficient of sqrt(1); zero when absent.
  Rational rational_part() const;

  RadCoeff operator-() const;
  RadCoeff& operator+=(const RadCoeff& y);
  RadCoeff& operator-=(const RadCoeff& y);
  RadCoeff& operator*=(const RadCoeff& y);

  friend RadCoeff operator+(RadCoeff x, const RadCoeff& y) { return x += y; }
  friend RadCoeff operator-(RadCoeff x, const RadCoeff& y) { return x -= y; }
  friend RadCoeff operator*(const RadCoeff& x, const RadCoeff& y);
  friend bool operator==(const RadCoeff& x, const RadCoeff& y) { return x.terms_ == y.terms_; }

  /// Approximate, for rendering only.
  double to_double() const;
  std::string to_string() const;

 private:
  void add_term(const Rational& c, const Integer& squarefree_radicand);

  Terms terms_;
};

inline RadCoeff rad_add(const RadCoeff& x, const RadCoeff& y) { return x + y; }
inline RadCoeff rad_mul(const RadCoeff& x, const RadCoeff& y) { return x * y; }
inline RadCoeff rad_sqrt_rational(const Rational& q) { return RadCoeff::sqrt_of(q); }

}  // namespace gbs
