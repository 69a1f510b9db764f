#include "gbs/scalar.hpp"

#include <cctype>
#include <cmath>

#include "gbs/error.hpp"

namespace gbs {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int sign_of(const Rational& q) { return sgn(q); }

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer denominator(std::string(den), 10);
  if (denominator == 0) {
    throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(Integer(n, 10), denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

bool is_squarefree(std::int64_t n) {
  if (n <= 0) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

QuadScalar::QuadScalar(Rational a) : a_(std::move(a)) { a_.canonicalize(); }

QuadScalar::QuadScalar(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ != 0 && (d_ < 2 || !is_squarefree(d_))) {
    throw Error(ErrorKind::InvalidField,
                "field parameter d must be squarefree and >= 2, got " + std::to_string(d_));
  }
  normalize();
}

void QuadScalar::normalize() {
  if (b_ == 0) d_ = 0;
}

std::int64_t QuadScalar::join_field(const QuadScalar& x, const QuadScalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw Error(ErrorKind::MixedField, "cannot combine Q(sqrt " + std::to_string(x.d_) +
                                         ") with Q(sqrt " + std::to_string(y.d_) + ")");
}

int QuadScalar::sign() const {
  const int sa = sign_of(a_);
  const int sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * d_;
  const int c = cmp(lhs, rhs);
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

Integer QuadScalar::floor() const {
  if (b_ == 0) return gbs::floor(a_);
  // value = (A + B sqrt d) / Q with Q = lcm of denominators.
  Integer q;
  mpz_lcm(q.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
  const Integer big_a = a_.get_num() * (q / a_.get_den());
  const Integer big_b = b_.get_num() * (q / b_.get_den());
  // B sqrt d is irrational; s = floor(sqrt(B^2 d)) brackets it strictly.
  Integer s;
  const Integer radicand = big_b * big_b * d_;
  mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());
  const Integer n = big_b > 0 ? Integer(big_a + s) : Integer(big_a - s - 1);
  // A + B sqrt d lies in (n, n+1), so floor of the quotient is floor(n / Q).
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
  return out;
}

QuadScalar QuadScalar::mod_one() const { return *this - QuadScalar(Rational(floor())); }

QuadScalar QuadScalar::operator-() const {
  QuadScalar out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& y) {
  d_ = join_field(*this, y);
  a_ += y.a_;
  b_ += y.b_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& y) {
  d_ = join_field(*this, y);
  a_ -= y.a_;
  b_ -= y.b_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& y) {
  const std::int64_t d = join_field(*this, y);
  Rational a = a_ * y.a_ + b_ * y.b_ * d;
  Rational b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& y) {
  if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in Q(sqrt d)");
  const std::int64_t d = join_field(*this, y);
  // 1/(c + e sqrt d) = (c - e sqrt d) / (c^2 - e^2 d); the norm is nonzero.
  const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
  QuadScalar conj;
  conj.a_ = y.a_ / norm;
  conj.b_ = -y.b_ / norm;
  conj.d_ = y.d_;
  conj.normalize();
  d_ = d;
  return *this *= conj;
}

std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y) {
  return quad_compare(x, y);
}

std::strong_ordering quad_compare(const QuadScalar& x, const QuadScalar& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double QuadScalar::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string QuadScalar::to_string() const {
  if (b_ == 0) return gbs::to_string(a_);
  std::string out;
  if (a_ != 0) out = gbs::to_string(a_) + (b_ > 0 ? "+" : "-");
  else if (b_ < 0) out = "-";
  const Rational mag = abs(b_);
  if (mag != 1) out += gbs::to_string(mag) + "*";
  out += "sqrt(" + std::to_string(d_) + ")";
  return out;
}

}  // namespace gbs
