#pragma once

#include <complex>
#include <vector>

#include "trigdunkl/orbits.hpp"
#include "trigdunkl/setting.hpp"

namespace trigdunkl {

using CVec = std::vector<cd>;

// A spectral parameter with its pairings against all coroots cached.
struct SpectralParam {
  CVec lambda;
  std::vector<cd> pair_coroot;  // per root index

  cd eval(const std::vector<double>& v) const;
  cd eval(const RatVec& v) const;
  cd lambda_sq() const;  // bilinear square sum lambda_j^2
};

SpectralParam make_spectral(const Setting& st, CVec lambda);
// w(lambda) for a finite Weyl element given by enumeration index.
SpectralParam transform(const Setting& st, int w_idx, const SpectralParam& sp);
SpectralParam transform(const Setting& st, const SignedPerm& w, const SpectralParam& sp);

inline constexpr double kGenericityMargin = 1e-10;

// Margin-checked membership in C_k (and C_k^reg when regular is set):
// |lambda(a^vee) - k| must exceed the margin relative to max(1, |k|) for
// every affine multiplicity class meeting the gradient a.
bool is_generic(const Setting& st, const Multiplicity& mult, const SpectralParam& sp,
                bool regular);
void require_generic(const Setting& st, const Multiplicity& mult, const SpectralParam& sp,
                     bool regular);

}  // namespace trigdunkl
