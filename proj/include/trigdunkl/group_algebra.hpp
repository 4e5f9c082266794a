#pragma once

#include <complex>
#include <map>

#include "trigdunkl/affine_weyl.hpp"

namespace trigdunkl {

using cd = std::complex<double>;

// Finitely supported element of the group algebra C[W ltimes Y].
struct GroupAlgebraElement {
  std::map<AffineWeylElement, cd> terms;

  static GroupAlgebraElement zero();
  static GroupAlgebraElement of(const AffineWeylElement& g, cd c = cd(1.0));

  void add_term(const AffineWeylElement& g, cd c);
  GroupAlgebraElement add(const GroupAlgebraElement& o) const;
  GroupAlgebraElement sub(const GroupAlgebraElement& o) const;
  GroupAlgebraElement scaled(cd c) const;
  GroupAlgebraElement mul(const GroupAlgebraElement& o) const;  // convolution
  cd chi() const;                                               // sum of coefficients
  double max_abs() const;
  double max_abs_diff(const GroupAlgebraElement& o) const;
  size_t support_size() const { return terms.size(); }
};

}  // namespace trigdunkl
