#include "trigdunkl/group_algebra.hpp"

#include <cmath>

namespace trigdunkl {

GroupAlgebraElement GroupAlgebraElement::zero() { return {}; }

GroupAlgebraElement GroupAlgebraElement::of(const AffineWeylElement& g, cd c) {
  GroupAlgebraElement e;
  e.terms[g] = c;
  return e;
}

void GroupAlgebraElement::add_term(const AffineWeylElement& g, cd c) {
  if (c == cd(0.0)) return;
  auto [it, inserted] = terms.emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cd(0.0)) terms.erase(it);
  }
}

GroupAlgebraElement GroupAlgebraElement::add(const GroupAlgebraElement& o) const {
  GroupAlgebraElement out = *this;
  for (const auto& [g, c] : o.terms) out.add_term(g, c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::sub(const GroupAlgebraElement& o) const {
  GroupAlgebraElement out = *this;
  for (const auto& [g, c] : o.terms) out.add_term(g, -c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(cd c) const {
  GroupAlgebraElement out;
  if (c == cd(0.0)) return out;
  for (const auto& [g, v] : terms) out.terms[g] = v * c;
  return out;
}

GroupAlgebraElement GroupAlgebraElement::mul(const GroupAlgebraElement& o) const {
  GroupAlgebraElement out;
  for (const auto& [g, c] : terms)
    for (const auto& [h, d] : o.terms) out.add_term(g.compose(h), c * d);
  return out;
}

cd GroupAlgebraElement::chi() const {
  cd s = 0.0;
  for (const auto& [g, c] : terms) s += c;
  return s;
}

double GroupAlgebraElement::max_abs() const {
  double m = 0.0;
  for (const auto& [g, c] : terms) m = std::max(m, std::abs(c));
  return m;
}

double GroupAlgebraElement::max_abs_diff(const GroupAlgebraElement& o) const {
  double m = 0.0;
  for (const auto& [g, c] : terms) {
    auto it = o.terms.find(g);
    m = std::max(m, std::abs(c - (it == o.terms.end() ? cd(0.0) : it->second)));
  }
  for (const auto& [g, c] : o.terms)
    if (!terms.count(g)) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace trigdunkl
