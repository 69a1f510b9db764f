#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gbs {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);
/// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);

bool is_squarefree(std::int64_t n);

/// Exact element a + b*sqrt(d) of the real quadratic field Q(sqrt d).
///
/// A value with b = 0 is a plain rational and combines with any field; its
/// field() reports 0. Values with b != 0 carry a squarefree d >= 2 and only
/// combine with values of the same field (MixedField otherwise).
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(Rational a);  // NOLINT(google-explicit-constructor)
  QuadScalar(long a) : QuadScalar(Rational(a)) {}  // NOLINT(google-explicit-constructor)
  /// Throws InvalidField unless d is squarefree and >= 2 (when b != 0).
  QuadScalar(Rational a, Rational b, std::int64_t d);

  static QuadScalar sqrt(std::int64_t d) { return QuadScalar(0, 1, d); }

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& radical_part() const noexcept { return b_; }
  std::int64_t field() const noexcept { return d_; }

  bool is_rational() const noexcept { return b_ == 0; }
  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
  /// -1, 0 or 1, decided with integer arithmetic.
  int sign() const;

  /// Greatest integer <= value.
  Integer floor() const;
  /// value - floor(value), in [0, 1).
  QuadScalar mod_one() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& y);
  QuadScalar& operator-=(const QuadScalar& y);
  QuadScalar& operator*=(const QuadScalar& y);
  /// Throws DivisionByZero.
  QuadScalar& operator/=(const QuadScalar& y);

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  /// Real order. Throws MixedField for irrational values of different fields.
  friend std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y);

  /// Approximate, for rendering only.
  double to_double() const;
  std::string to_string() const;

 private:
  static std::int64_t join_field(const QuadScalar& x, const QuadScalar& y);
  void normalize();

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

std::strong_ordering quad_compare(const QuadScalar& x, const QuadScalar& y);
inline QuadScalar mod_one(const QuadScalar& x) { return x.mod_one(); }
inline bool is_rational(const QuadScalar& x) { return x.is_rational(); }

}  // namespace gbs
