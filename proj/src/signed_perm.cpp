#include "trigdunkl/signed_perm.hpp"

#include <algorithm>

namespace trigdunkl {

SignedPerm SignedPerm::identity(int dim) {
  SignedPerm p;
  p.perm.resize(dim);
  p.sign.assign(dim, 1);
  for (int i = 0; i < dim; ++i) p.perm[i] = i;
  return p;
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < dim(); ++i)
    if (perm[i] != i || sign[i] != 1) return false;
  return true;
}

SignedPerm SignedPerm::compose(const SignedPerm& b) const {
  SignedPerm out;
  const int d = dim();
  out.perm.resize(d);
  out.sign.resize(d);
  for (int j = 0; j < d; ++j) {
    out.perm[j] = perm[b.perm[j]];
    out.sign[j] = b.sign[j] * sign[b.perm[j]];
  }
  return out;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm out;
  const int d = dim();
  out.perm.resize(d);
  out.sign.resize(d);
  for (int j = 0; j < d; ++j) {
    out.perm[perm[j]] = j;
    out.sign[perm[j]] = sign[j];
  }
  return out;
}

template <typename V>
static V apply_impl(const SignedPerm& p, const V& v) {
  V out(v.size());
  for (size_t j = 0; j < v.size(); ++j) {
    auto x = v[j];
    if (p.sign[j] < 0) x = -x;
    out[p.perm[j]] = x;
  }
  return out;
}

RatVec SignedPerm::apply(const RatVec& v) const { return apply_impl(*this, v); }

std::vector<double> SignedPerm::apply(const std::vector<double>& v) const {
  return apply_impl(*this, v);
}

std::vector<std::complex<double>> SignedPerm::apply(
    const std::vector<std::complex<double>>& v) const {
  return apply_impl(*this, v);
}

bool SignedPerm::operator<(const SignedPerm& o) const {
  if (perm != o.perm) return perm < o.perm;
  return sign < o.sign;
}

}  // namespace trigdunkl
