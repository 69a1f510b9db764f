#include "gbs/radical.hpp"

#include <cmath>

#include "gbs/error.hpp"

namespace gbs {

std::pair<Integer, Integer> squarefree_split(const Integer& n) {
  if (n <= 0) throw Error(ErrorKind::NonPositiveRadicand, "radicand must be positive");
  Integer rest = n;
  Integer square = 1;
  Integer core = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    int exponent = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++exponent;
    }
    for (int i = 0; i < exponent / 2; ++i) square *= p;
    if (exponent % 2) core *= p;
  }
  core *= rest;
  return {square, core};
}

RadCoeff::RadCoeff(Rational q) {
  q.canonicalize();
  if (q != 0) terms_.emplace(Integer(1), std::move(q));
}

RadCoeff RadCoeff::term(const Rational& c, const Integer& radicand) {
  auto [square, core] = squarefree_split(radicand);
  Rational coeff = c * Rational(square);
  coeff.canonicalize();
  RadCoeff out;
  out.add_term(coeff, core);
  return out;
}

RadCoeff RadCoeff::sqrt_of(Rational q) {
  q.canonicalize();
  if (q <= 0) throw Error(ErrorKind::NonPositiveRadicand, "sqrt of non-positive rational");
  // sqrt(m/n) = sqrt(m n) / n
  const Integer mn = q.get_num() * q.get_den();
  return term(Rational(1, 1) / Rational(q.get_den()), mn);
}

RadCoeff RadCoeff::from_quad(const QuadScalar& x) {
  RadCoeff out(x.rational_part());
  if (!x.is_rational()) out.add_term(x.radical_part(), Integer(x.field()));
  return out;
}

bool RadCoeff::is_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadCoeff::rational_part() const {
  auto it = terms_.find(Integer(1));
  return it == terms_.end() ? Rational(0) : it->second;
}

void RadCoeff::add_term(const Rational& c, const Integer& squarefree_radicand) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(squarefree_radicand, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RadCoeff RadCoeff::operator-() const {
  RadCoeff out = *this;
  for (auto& [r, c] : out.terms_) c = -c;
  return out;
}

RadCoeff& RadCoeff::operator+=(const RadCoeff& y) {
  for (const auto& [r, c] : y.terms_) add_term(c, r);
  return *this;
}

RadCoeff& RadCoeff::operator-=(const RadCoeff& y) {
  for (const auto& [r, c] : y.terms_) add_term(-c, r);
  return *this;
}

RadCoeff operator*(const RadCoeff& x, const RadCoeff& y) {
  RadCoeff out;
  Integer g;
  for (const auto& [r, c] : x.terms_) {
    for (const auto& [s, e] : y.terms_) {
      // r, s squarefree: sqrt(r) sqrt(s) = g sqrt((r/g)(s/g)) with g = gcd(r, s).
      mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
      const Integer radicand = (r / g) * (s / g);
      out.add_term(c * e * Rational(g), radicand);
    }
  }
  return out;
}

RadCoeff& RadCoeff::operator*=(const RadCoeff& y) { return *this = *this * y; }

double RadCoeff::to_double() const {
  double v = 0.0;
  for (const auto& [r, c] : terms_) v += c.get_d() * std::sqrt(r.get_d());
  return v;
}

std::string RadCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    const bool negative = c < 0;
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    const Rational mag = abs(c);
    if (r == 1) {
      out += gbs::to_string(mag);
    } else {
      if (mag != 1) out += gbs::to_string(mag) + "*";
      out += "sqrt(" + r.get_str() + ")";
    }
    first = false;
  }
  return out;
}

}  // namespace gbs
