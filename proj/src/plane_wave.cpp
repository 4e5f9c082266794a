#include "trigdunkl/plane_wave.hpp"

#include <cmath>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

namespace {

constexpr double kIntegralMargin = 1e-12;

void check_compatible(const PlaneWaveVector& a, const PlaneWaveVector& b) {
  if (a.st != b.st || a.mod != b.mod || a.lambda.lambda != b.lambda.lambda)
    throw std::logic_error("plane wave vectors live in different spaces");
}

// (w lambda)(v) = lambda(w^{-1} v)
cd wl_eval(const PlaneWaveVector& f, int w, const RatVec& v) {
  return f.lambda.eval(f.st->W[f.st->w_inv[w]].apply(v));
}

cd wl_eval(const PlaneWaveVector& f, int w, const std::vector<double>& v) {
  return f.lambda.eval(f.st->W[f.st->w_inv[w]].apply(v));
}

cd wl_coroot(const PlaneWaveVector& f, int w, int root_idx) {
  return f.lambda.pair_coroot[f.st->root_act[f.st->w_inv[w]][root_idx]];
}

}  // namespace

Vec PlaneWaveVector::evaluate(const std::vector<double>& x) const {
  Vec out = Vec::Zero(mod->dim);
  for (size_t w = 0; w < coef.size(); ++w) {
    if (coef[w].size() == 0) continue;
    out += std::exp(wl_eval(*this, static_cast<int>(w), x)) * coef[w];
  }
  return out;
}

double PlaneWaveVector::max_abs() const {
  double m = 0.0;
  for (const Vec& c : coef)
    if (c.size() > 0) m = std::max(m, c.cwiseAbs().maxCoeff());
  return m;
}

double PlaneWaveVector::max_abs_diff(const PlaneWaveVector& o) const {
  check_compatible(*this, o);
  double m = 0.0;
  for (size_t w = 0; w < coef.size(); ++w)
    m = std::max(m, (coef[w] - o.coef[w]).cwiseAbs().maxCoeff());
  return m;
}

PlaneWaveVector PlaneWaveVector::add(const PlaneWaveVector& o) const {
  check_compatible(*this, o);
  PlaneWaveVector out = *this;
  for (size_t w = 0; w < coef.size(); ++w) out.coef[w] += o.coef[w];
  return out;
}

PlaneWaveVector PlaneWaveVector::sub(const PlaneWaveVector& o) const {
  check_compatible(*this, o);
  PlaneWaveVector out = *this;
  for (size_t w = 0; w < coef.size(); ++w) out.coef[w] -= o.coef[w];
  return out;
}

PlaneWaveVector PlaneWaveVector::scaled(cd c) const {
  PlaneWaveVector out = *this;
  for (Vec& v : out.coef) v *= c;
  return out;
}

PlaneWaveVector pw_zero(const Setting& st, const WaModule& mod, SpectralParam lambda) {
  PlaneWaveVector f;
  f.st = &st;
  f.mod = &mod;
  f.lambda = std::move(lambda);
  f.coef.assign(st.W.size(), Vec::Zero(mod.dim));
  return f;
}

PlaneWaveVector pw_basis(const Setting& st, const WaModule& mod, SpectralParam lambda,
                         int w_idx, const Vec& m) {
  PlaneWaveVector f = pw_zero(st, mod, std::move(lambda));
  f.coef[w_idx] = m;
  return f;
}

std::pair<cd, cd> integral_exp_coeffs(cd zprime, long long a0) {
  if (std::abs(zprime) <= kIntegralMargin)
    throw GenericityError("integral operator pairing mu(Da^vee) is within margin of zero");
  cd phase = std::exp(-static_cast<double>(a0) * zprime);
  return {cd(1.0) / zprime, -phase / zprime};
}

PlaneWaveVector q_letter(const PlaneWaveVector& f, int letter, const Multiplicity& mult) {
  const Setting& st = *f.st;
  const AffineRoot& a = st.letters.letters[letter];
  cd k = mult.k_affine(st.rs, st.orbits, a.root, a.m);
  const SignedPerm& sda = st.rs.refl[a.root];
  PlaneWaveVector out = pw_zero(st, *f.mod, f.lambda);
  for (size_t w = 0; w < f.coef.size(); ++w) {
    const Vec& mw = f.coef[w];
    if (mw.size() == 0 || mw.isZero(0.0)) continue;
    int wi = static_cast<int>(w);
    cd zp = wl_coroot(f, wi, a.root);
    cd phase = std::exp(-static_cast<double>(a.m) * zp);
    int sw = st.w_index(sda.compose(st.W[w]));
    out.coef[sw] += phase * (f.mod->simple_action[letter] * mw);
    if (k != cd(0.0)) {
      if (std::abs(zp) <= kIntegralMargin)
        throw GenericityError("integral operator pairing mu(Da^vee) is within margin of zero");
      out.coef[sw] += (k / zp) * phase * mw;
      out.coef[w] -= (k / zp) * mw;
    }
  }
  return out;
}

PlaneWaveVector q_omega(const PlaneWaveVector& f, const OmegaElement& e) {
  const Setting& st = *f.st;
  AffineWeylElement u = st.omega->realize(e);
  Mat rho = f.mod->act_omega(e);
  PlaneWaveVector out = pw_zero(st, *f.mod, f.lambda);
  for (size_t w = 0; w < f.coef.size(); ++w) {
    const Vec& mw = f.coef[w];
    if (mw.size() == 0 || mw.isZero(0.0)) continue;
    cd phase = std::exp(-wl_eval(f, static_cast<int>(w), u.y));
    int tw = st.w_index(u.w.compose(st.W[w]));
    out.coef[tw] += phase * (rho * mw);
  }
  return out;
}

PlaneWaveVector q_element(const PlaneWaveVector& f, const AffineWeylElement& g,
                          const Multiplicity& mult) {
  const Setting& st = *f.st;
  ReducedWord rw = st.reduced_word(g);
  PlaneWaveVector out = q_omega(f, rw.omega);
  for (int j = static_cast<int>(rw.word.size()) - 1; j >= 0; --j)
    out = q_letter(out, rw.word[j], mult);
  return out;
}

PlaneWaveVector apply_group(const PlaneWaveVector& f, const AffineWeylElement& u) {
  const Setting& st = *f.st;
  Mat rho = f.mod->act(u);
  PlaneWaveVector out = pw_zero(st, *f.mod, f.lambda);
  for (size_t w = 0; w < f.coef.size(); ++w) {
    const Vec& mw = f.coef[w];
    if (mw.size() == 0 || mw.isZero(0.0)) continue;
    cd phase = std::exp(-wl_eval(f, static_cast<int>(w), u.y));
    int tw = st.w_index(u.w.compose(st.W[w]));
    out.coef[tw] += phase * (rho * mw);
  }
  return out;
}

PlaneWaveVector apply_integral(const PlaneWaveVector& f, int letter) {
  const Setting& st = *f.st;
  const AffineRoot& a = st.letters.letters[letter];
  const SignedPerm& sda = st.rs.refl[a.root];
  PlaneWaveVector out = pw_zero(st, *f.mod, f.lambda);
  for (size_t w = 0; w < f.coef.size(); ++w) {
    const Vec& mw = f.coef[w];
    if (mw.size() == 0 || mw.isZero(0.0)) continue;
    int wi = static_cast<int>(w);
    cd zp = wl_coroot(f, wi, a.root);
    auto [c_id, c_refl] = integral_exp_coeffs(zp, a.m);
    int sw = st.w_index(sda.compose(st.W[w]));
    out.coef[w] += c_id * mw;
    out.coef[sw] += c_refl * mw;
  }
  return out;
}

PlaneWaveVector apply_deriv(const PlaneWaveVector& f, const std::vector<double>& v) {
  PlaneWaveVector out = f;
  for (size_t w = 0; w < f.coef.size(); ++w)
    out.coef[w] = wl_eval(f, static_cast<int>(w), v) * f.coef[w];
  return out;
}

Vec act_algebra(const WaModule& mod, const GroupAlgebraElement& e, const Vec& m) {
  Vec out = Vec::Zero(mod.dim);
  for (const auto& [g, c] : e.terms) out += c * (mod.act(g) * m);
  return out;
}

PlaneWaveVector psi_vector(const Setting& st, const Multiplicity& mult, const WaModule& mod,
                           const SpectralParam& lambda, const Vec& m) {
  require_generic(st, mult, lambda, false);
  PlaneWaveVector f = pw_zero(st, mod, lambda);
  for (size_t w = 0; w < st.W.size(); ++w) {
    AffineWeylElement wg = awe_from(st.W[w], RatVec(st.rs.dim, Rat(0)));
    f.coef[w] = act_algebra(mod, j_element(st, mult, wg, lambda), m);
  }
  return f;
}

PlaneWaveVector symmetrize(const Setting& st, const Multiplicity& mult, const WaModule& mod,
                           const SpectralParam& lambda, const Vec& m) {
  cd ck = c_function(st, mult, lambda);
  if (std::abs(ck) <= 1e-12)
    throw GenericityError("symmetrization at a degenerate spectrum: c_k(lambda) vanishes");
  PlaneWaveVector base = pw_basis(st, mod, lambda, 0, m);
  PlaneWaveVector out = pw_zero(st, mod, lambda);
  for (size_t w = 0; w < st.W.size(); ++w) {
    AffineWeylElement wg = awe_from(st.W[w], RatVec(st.rs.dim, Rat(0)));
    out = out.add(q_element(base, wg, mult));
  }
  return out;
}

InvarianceResult w_invariance_criterion(const Setting& st, const Multiplicity& mult,
                                        const PlaneWaveVector& f, double tol) {
  InvarianceResult res;
  res.m = f.coef[0];
  double scale = std::max(1.0, f.max_abs());
  for (size_t w = 0; w < st.W.size(); ++w) {
    AffineWeylElement wg = awe_from(st.W[w], RatVec(st.rs.dim, Rat(0)));
    Vec expect = act_algebra(*f.mod, j_element(st, mult, wg, f.lambda), res.m);
    double r = (f.coef[w] - expect).cwiseAbs().maxCoeff() / scale;
    res.max_residual = std::max(res.max_residual, r);
  }
  res.invariant = res.max_residual <= tol;
  return res;
}

InvarianceResult s0_invariance_criterion(const Setting& st, const Multiplicity& mult,
                                         const PlaneWaveVector& f, double tol) {
  InvarianceResult res;
  res.m = f.coef[0];
  RatVec theta_vee = st.rs.coroot(st.rs.theta);
  double scale = std::max(1.0, f.max_abs());
  int s0 = st.letters.size() - 1;
  for (size_t w = 0; w < st.W.size(); ++w) {
    AffineWeylElement wg = awe_from(st.W[w], RatVec(st.rs.dim, Rat(0)));
    AffineWeylElement s0w = st.letters.refl[s0].compose(wg);
    AffineWeylElement sthw = awe_from(st.rs.refl[st.rs.theta].compose(st.W[w]),
                                      RatVec(st.rs.dim, Rat(0)));
    Vec lhs = act_algebra(*f.mod, j_element(st, mult, s0w, f.lambda), res.m);
    cd phase = std::exp(-wl_eval(f, static_cast<int>(w), theta_vee));
    Vec rhs = phase * act_algebra(*f.mod, j_element(st, mult, sthw, f.lambda), res.m);
    double r = (lhs - rhs).cwiseAbs().maxCoeff() / scale;
    res.max_residual = std::max(res.max_residual, r);
  }
  res.invariant = res.max_residual <= tol;
  return res;
}

}  // namespace trigdunkl
