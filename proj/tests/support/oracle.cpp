#include "oracle.hpp"

namespace gbs::testing {

Decimal decimal(const Rational& q) {
  return Decimal(q.get_num().get_str()) / Decimal(q.get_den().get_str());
}

Decimal decimal(const QuadScalar& x) {
  Decimal out = decimal(x.rational_part());
  if (!x.is_rational()) out += decimal(x.radical_part()) * sqrt(Decimal(x.field()));
  return out;
}

Decimal decimal(const RadCoeff& c) {
  Decimal out = 0;
  for (const auto& [r, q] : c.terms()) out += decimal(q) * sqrt(Decimal(r.get_str()));
  return out;
}

int decimal_sign(const Decimal& x) {
  static const Decimal eps("1e-40");
  if (abs(x) < eps) return 0;
  return x < 0 ? -1 : 1;
}

}  // namespace gbs::testing
