#include "trigdunkl/spectral.hpp"

#include <cmath>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

cd SpectralParam::eval(const std::vector<double>& v) const {
  cd s = 0.0;
  for (size_t i = 0; i < v.size(); ++i) s += lambda[i] * v[i];
  return s;
}

cd SpectralParam::eval(const RatVec& v) const {
  cd s = 0.0;
  for (size_t i = 0; i < v.size(); ++i) s += lambda[i] * to_double(v[i]);
  return s;
}

cd SpectralParam::lambda_sq() const {
  cd s = 0.0;
  for (const cd& x : lambda) s += x * x;
  return s;
}

SpectralParam make_spectral(const Setting& st, CVec lambda) {
  if (static_cast<int>(lambda.size()) != st.rs.dim)
    throw ConfigError("spectral parameter has dimension " + std::to_string(lambda.size()) +
                      " but the ambient space has dimension " + std::to_string(st.rs.dim));
  SpectralParam sp;
  sp.lambda = std::move(lambda);
  sp.pair_coroot.resize(st.rs.nroots());
  for (int i = 0; i < st.rs.nroots(); ++i) sp.pair_coroot[i] = sp.eval(st.rs.coroot(i));
  return sp;
}

SpectralParam transform(const Setting& st, int w_idx, const SpectralParam& sp) {
  return transform(st, st.W[w_idx], sp);
}

SpectralParam transform(const Setting& st, const SignedPerm& w, const SpectralParam& sp) {
  return make_spectral(st, w.apply(sp.lambda));
}

namespace {

bool generic_impl(const Setting& st, const Multiplicity& mult, const SpectralParam& sp,
                  bool regular, std::string* why) {
  for (int i = 0; i < st.rs.nroots(); ++i) {
    cd z = sp.pair_coroot[i];
    int o = st.rs.worbit[i];
    int nc = st.orbits.is_split(o) ? 2 : 1;
    for (int c = 0; c < nc; ++c) {
      cd k = mult.k(st.orbits.class_base[o] + c);
      double scale = std::max(1.0, std::abs(k));
      if (std::abs(z - k) <= kGenericityMargin * scale) {
        if (why)
          *why = "spectral parameter is not generic: lambda(a^vee) is within margin of a "
                 "multiplicity value";
        return false;
      }
      if (regular && std::abs(z) <= kGenericityMargin * scale) {
        if (why)
          *why = "spectral parameter is not regular: lambda(a^vee) is within margin of zero";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_generic(const Setting& st, const Multiplicity& mult, const SpectralParam& sp,
                bool regular) {
  return generic_impl(st, mult, sp, regular, nullptr);
}

void require_generic(const Setting& st, const Multiplicity& mult, const SpectralParam& sp,
                     bool regular) {
  std::string why;
  if (!generic_impl(st, mult, sp, regular, &why)) throw GenericityError(why);
}

}  // namespace trigdunkl
