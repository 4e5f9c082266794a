#pragma once

#include <complex>
#include <vector>

#include "trigdunkl/exactlin.hpp"

namespace trigdunkl {

// Signed permutation of the ambient coordinates: w(e_j) = sign[j] * e_{perm[j]}.
// Every finite Weyl group handled here acts through these, so group
// composition stays exact and integer-valued.
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;  // entries +-1

  static SignedPerm identity(int dim);
  int dim() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;

  // (a.compose(b)) acts as a after b.
  SignedPerm compose(const SignedPerm& b) const;
  SignedPerm inverse() const;

  // Orthogonal action, usable on vectors and covectors alike.
  RatVec apply(const RatVec& v) const;
  std::vector<double> apply(const std::vector<double>& v) const;
  std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& v) const;

  bool operator==(const SignedPerm& o) const = default;
  bool operator<(const SignedPerm& o) const;
};

}  // namespace trigdunkl
