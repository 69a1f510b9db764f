#include "gbs/step_function.hpp"

#include <algorithm>

namespace gbs {

StepFunction StepFunction::indicator(const Interval& i) {
  StepFunction out;
  if (!i.empty()) out.pieces_.push_back({i, RadCoeff(1)});
  return out;
}

StepFunction StepFunction::indicator(const IntervalSet& s) {
  StepFunction out;
  for (const auto& p : s.pieces()) out.pieces_.push_back({p, RadCoeff(1)});
  return out;
}

StepFunction StepFunction::from_pieces(std::vector<StepPiece> pieces) {
  std::erase_if(pieces, [](const StepPiece& p) { return p.support.empty() || p.value.is_zero(); });
  StepFunction out;
  if (pieces.empty()) return out;

  std::vector<QuadScalar> cuts;
  cuts.reserve(2 * pieces.size());
  for (const auto& p : pieces) {
    cuts.push_back(p.support.lo);
    cuts.push_back(p.support.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Elementary segment k is [cuts[k], cuts[k+1]).
  std::vector<RadCoeff> values(cuts.size() - 1);
  for (const auto& p : pieces) {
    const auto first = std::lower_bound(cuts.begin(), cuts.end(), p.support.lo) - cuts.begin();
    const auto last = std::lower_bound(cuts.begin(), cuts.end(), p.support.hi) - cuts.begin();
    for (auto k = first; k < last; ++k) values[k] += p.value;
  }
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    if (values[k].is_zero()) continue;
    auto& v = out.pieces_;
    if (!v.empty() && v.back().support.hi == cuts[k] && v.back().value == values[k]) {
      v.back().support.hi = cuts[k + 1];
    } else {
      v.push_back({Interval{cuts[k], cuts[k + 1]}, std::move(values[k])});
    }
  }
  return out;
}

RadCoeff StepFunction::value_at(const QuadScalar& x) const {
  for (const auto& p : pieces_) {
    if (p.support.contains(x)) return p.value;
  }
  return {};
}

IntervalSet StepFunction::support() const {
  std::vector<Interval> s;
  for (const auto& p : pieces_) s.push_back(p.support);
  return IntervalSet::from_pieces(std::move(s));
}

StepFunction StepFunction::operator-() const {
  StepFunction out = *this;
  for (auto& p : out.pieces_) p.value = -p.value;
  return out;
}

StepFunction operator+(const StepFunction& x, const StepFunction& y) {
  std::vector<StepPiece> all = x.pieces_;
  all.insert(all.end(), y.pieces_.begin(), y.pieces_.end());
  return StepFunction::from_pieces(std::move(all));
}

StepFunction operator*(const RadCoeff& c, const StepFunction& x) {
  if (c.is_zero()) return {};
  StepFunction out = x;
  for (auto& p : out.pieces_) p.value = c * p.value;
  return out;
}

std::string StepFunction::to_string() const {
  if (pieces_.empty()) return "0";
  std::string out;
  for (const auto& p : pieces_) {
    if (!out.empty()) out += " + ";
    out += "(" + p.value.to_string() + ")*chi" + p.support.to_string();
  }
  return out;
}

RadCoeff inner_product(const StepFunction& f, const StepFunction& g) {
  RadCoeff total;
  const auto& a = f.pieces();
  const auto& b = g.pieces();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (auto k = intersect(a[i].support, b[j].support)) {
      total += a[i].value * b[j].value * RadCoeff::from_quad(k->length());
    }
    if (a[i].support.hi < b[j].support.hi) ++i;
    else ++j;
  }
  return total;
}

}  // namespace gbs
