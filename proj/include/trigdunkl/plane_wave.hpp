#pragma once

#include "trigdunkl/cocycle.hpp"
#include "trigdunkl/wa_module.hpp"

namespace trigdunkl {

// Element of E(lambda) tensor M: a finite sum over the finite Weyl group of
// plane waves e^{w lambda} with module-valued coefficients.
struct PlaneWaveVector {
  const Setting* st = nullptr;
  const WaModule* mod = nullptr;
  SpectralParam lambda;
  std::vector<Vec> coef;  // indexed by the W enumeration

  Vec evaluate(const std::vector<double>& x) const;
  double max_abs() const;
  double max_abs_diff(const PlaneWaveVector& o) const;
  PlaneWaveVector add(const PlaneWaveVector& o) const;
  PlaneWaveVector sub(const PlaneWaveVector& o) const;
  PlaneWaveVector scaled(cd c) const;
};

PlaneWaveVector pw_zero(const Setting& st, const WaModule& mod, SpectralParam lambda);
// e^{w lambda} tensor m at a single basis slot.
PlaneWaveVector pw_basis(const Setting& st, const WaModule& mod, SpectralParam lambda,
                         int w_idx, const Vec& m);

// Coefficients of I(a) e^mu = c_id e^mu + c_refl e^{s_{Da} mu}, where
// zprime = mu(Da^vee) and a0 = a(0) is the affine offset of a.
std::pair<cd, cd> integral_exp_coeffs(cd zprime, long long a0);

// The representation Q: letters act by s_a tensor s_a - k_a I(a) tensor id,
// length-zero elements by omega tensor omega.
PlaneWaveVector q_letter(const PlaneWaveVector& f, int letter, const Multiplicity& mult);
PlaneWaveVector q_omega(const PlaneWaveVector& f, const OmegaElement& e);
PlaneWaveVector q_element(const PlaneWaveVector& f, const AffineWeylElement& g,
                          const Multiplicity& mult);

// Plain tensor-square action u tensor u of a group element.
PlaneWaveVector apply_group(const PlaneWaveVector& f, const AffineWeylElement& u);
// I(a) tensor id for a letter.
PlaneWaveVector apply_integral(const PlaneWaveVector& f, int letter);
// Directional derivative d_v, acting diagonally as (w lambda)(v).
PlaneWaveVector apply_deriv(const PlaneWaveVector& f, const std::vector<double>& v);

// psi_lambda^m = sum_w e^{w lambda} tensor J_w(lambda) m.
PlaneWaveVector psi_vector(const Setting& st, const Multiplicity& mult, const WaModule& mod,
                           const SpectralParam& lambda, const Vec& m);
// sum_w Q(w)(e^lambda tensor m), which equals c_k(lambda) psi_lambda^m.
PlaneWaveVector symmetrize(const Setting& st, const Multiplicity& mult, const WaModule& mod,
                           const SpectralParam& lambda, const Vec& m);

struct InvarianceResult {
  bool invariant = false;
  double max_residual = 0.0;
  Vec m;
};

// f is Q(w)-invariant for all finite w iff every coefficient satisfies
// m_w = J_w(lambda) m_1.
InvarianceResult w_invariance_criterion(const Setting& st, const Multiplicity& mult,
                                        const PlaneWaveVector& f, double tol = 1e-9);
// Given W-invariance, Q(s_0) f = f iff J_{s_0 w}(lambda) m = e^{-(w lambda)(theta^vee)}
// J_{s_theta w}(lambda) m for all finite w.
InvarianceResult s0_invariance_criterion(const Setting& st, const Multiplicity& mult,
                                         const PlaneWaveVector& f, double tol = 1e-9);

// Module-valued application of a group algebra element.
Vec act_algebra(const WaModule& mod, const GroupAlgebraElement& e, const Vec& m);

}  // namespace trigdunkl
