#include "trigdunkl/chamber_function.hpp"

#include <cmath>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

Vec ChamberData::evaluate(const std::vector<double>& v) {
  ChamberLocation loc = locate_chamber(setting(), v);
  return expansion(loc.u.inverse()).evaluate(v);
}

ChamberFunction::ChamberFunction(const Setting& st, const Multiplicity& mult,
                                 const WaModule& mod, PlaneWaveVector g)
    : st_(&st), mult_(&mult), mod_(&mod), g_(std::move(g)), zero_k_(mult.all_zero()) {}

const PlaneWaveVector& ChamberFunction::expansion(const AffineWeylElement& u) {
  if (zero_k_) return g_;  // Q(u) inverts the plain action exactly
  auto it = cache_.find(u);
  if (it != cache_.end()) return it->second;
  PlaneWaveVector f = apply_group(q_element(g_, u, *mult_), u.inverse());
  return cache_.emplace(u, std::move(f)).first->second;
}

void ChamberFunction::override_expansion(const AffineWeylElement& u, PlaneWaveVector f) {
  cache_.insert_or_assign(u, std::move(f));
}

DunklApplied::DunklApplied(ChamberData& parent, std::vector<double> v)
    : parent_(&parent), v_(std::move(v)) {}

const PlaneWaveVector& DunklApplied::expansion(const AffineWeylElement& w) {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  const Setting& st = setting();
  PlaneWaveVector out = apply_deriv(parent_->expansion(w), v_);
  for (const AffineRoot& a : inversion_set(st.rs, w)) {
    cd k = mult().k_affine(st.rs, st.orbits, a.root, a.m);
    if (k == cd(0.0)) continue;
    double dav = 0.0;
    for (int t = 0; t < st.rs.dim; ++t) dav += to_double(st.rs.root(a.root)[t]) * v_[t];
    if (dav == 0.0) continue;
    AffineWeylElement sa = aroot_reflection(st.rs, a);
    PlaneWaveVector term = apply_group(parent_->expansion(w.compose(sa)), sa);
    out = out.sub(term.scaled(k * dav));
  }
  return cache_.emplace(w, std::move(out)).first->second;
}

double check_jump(ChamberData& f, const AffineWeylElement& c, const AffineRoot& b, int order,
                  const std::vector<std::vector<double>>& points) {
  const Setting& st = f.setting();
  // b (or -b) must be the image of a letter wall of C_+ under c.
  AffineRoot pos_b = b;
  int letter = -1;
  for (int i = 0; i < st.letters.size(); ++i) {
    AffineRoot img = act_aroot(st.rs, c, st.letters.letters[i]);
    if (img == b || img == aroot_negate(st.rs, b)) {
      letter = i;
      pos_b = img;  // oriented positive on c(C_+)
      break;
    }
  }
  if (letter < 0)
    throw GeometryError("affine root is not a wall of the requested chamber");

  cd k = f.mult().k_affine(st.rs, st.orbits, pos_b.root, pos_b.m);
  std::vector<double> d(st.rs.dim);
  for (int t = 0; t < st.rs.dim; ++t) d[t] = to_double(st.rs.coroot(pos_b.root)[t]);
  AffineWeylElement sb = aroot_reflection(st.rs, pos_b);
  Mat rho_sb = f.module().act(sb);

  const PlaneWaveVector& fc = f.expansion(c.inverse());
  const PlaneWaveVector& fn = f.expansion(c.inverse().compose(sb));
  PlaneWaveVector dc = fc, dn = fn, dprev = fc;
  for (int r = 0; r < order; ++r) {
    if (r == order - 1) dprev = dc;
    dc = apply_deriv(dc, d);
    dn = apply_deriv(dn, d);
  }

  double worst = 0.0;
  for (const std::vector<double>& p : points) {
    Vec lhs = dc.evaluate(p) - dn.evaluate(p);
    Vec rhs = Vec::Zero(f.module().dim);
    if (order >= 1) {
      double sign = (order % 2 == 0) ? 0.0 : -2.0;
      if (sign != 0.0 && k != cd(0.0)) rhs = (sign * k) * (rho_sb * dprev.evaluate(p));
    }
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

std::vector<std::vector<double>> chamber_wall_points(const Setting& st,
                                                     const AffineWeylElement& c, int letter,
                                                     int count, uint64_t seed) {
  std::vector<std::vector<double>> pts = wall_samples(st, letter, count, seed);
  for (std::vector<double>& p : pts) p = c.act_point(p);
  return pts;
}

HamiltonianReport hamiltonian_residual(ChamberData& f,
                                       const std::vector<AffineWeylElement>& chambers,
                                       int points_per_wall, uint64_t seed, double tol) {
  const Setting& st = f.setting();
  HamiltonianReport rep;
  rep.chambers = static_cast<int>(chambers.size());

  // Shared eigenvalue, and per-chamber symbolic check that every frequency
  // w lambda in use has the same bilinear square as lambda.
  const PlaneWaveVector& base = f.expansion(awe_identity(st.rs.dim));
  rep.eigenvalue = -base.lambda.lambda_sq();
  for (const AffineWeylElement& c : chambers) {
    const PlaneWaveVector& e = f.expansion(c.inverse());
    for (size_t w = 0; w < e.coef.size(); ++w) {
      if (e.coef[w].size() == 0 || e.coef[w].isZero(0.0)) continue;
      SpectralParam wl = transform(st, static_cast<int>(w), e.lambda);
      rep.eigen_dev = std::max(rep.eigen_dev, std::abs(wl.lambda_sq() - e.lambda.lambda_sq()));
    }
  }

  // Continuity first; abort with a diagnostic when it fails.
  uint64_t salt = 0;
  for (const AffineWeylElement& c : chambers) {
    for (int i = 0; i < st.letters.size(); ++i) {
      AffineRoot b = act_aroot(st.rs, c, st.letters.letters[i]);
      auto pts = chamber_wall_points(st, c, i, points_per_wall, seed + salt);
      ++salt;
      double r0 = check_jump(f, c, b, 0, pts);
      rep.continuity_max = std::max(rep.continuity_max, r0);
      if (r0 > tol) {
        rep.pass = false;
        rep.diagnostic = "continuity fails across the wall of letter " + std::to_string(i) +
                         " (residual " + std::to_string(r0) + ")";
        return rep;
      }
      double r1 = check_jump(f, c, b, 1, pts);
      rep.jump_max = std::max(rep.jump_max, r1);
    }
  }
  rep.pass = rep.jump_max <= tol && rep.eigen_dev <= 1e-10;
  if (!rep.pass) rep.diagnostic = "first-order jump conditions exceed tolerance";
  return rep;
}

WaInvarianceReport wa_invariance_check(const Setting& st, const Multiplicity& mult,
                                       const WaModule& mod, const PlaneWaveVector& g,
                                       int points_per_wall, uint64_t seed, double tol) {
  WaInvarianceReport rep;
  double scale = std::max(1.0, g.max_abs());
  auto record = [&](double r, const std::string& what) {
    rep.max_residual = std::max(rep.max_residual, r);
    if (r > tol * scale) {
      rep.pass = false;
      rep.failures.push_back(what + " (residual " + std::to_string(r) + ")");
    }
  };
  for (int i = 0; i < st.letters.size(); ++i) {
    const AffineRoot& a = st.letters.letters[i];
    cd k = mult.k_affine(st.rs, st.orbits, a.root, a.m);
    std::vector<double> dvee(st.rs.dim);
    for (int t = 0; t < st.rs.dim; ++t) dvee[t] = to_double(st.rs.coroot(a.root)[t]);
    PlaneWaveVector dg = apply_deriv(g, dvee);
    const Mat& rho = mod.simple_action[i];
    for (const std::vector<double>& p : wall_samples(st, i, points_per_wall, seed + i)) {
      Vec val = g.evaluate(p);
      record((rho * val - val).cwiseAbs().maxCoeff(),
             "boundary value not fixed by letter " + std::to_string(i));
      Vec dval = dg.evaluate(p);
      record((dval + rho * dval + 2.0 * k * val).cwiseAbs().maxCoeff(),
             "normal derivative condition fails at letter " + std::to_string(i));
    }
  }
  for (const auto& gen : st.omega->generators()) {
    PlaneWaveVector moved = apply_group(g, gen.g);
    record(moved.max_abs_diff(g), "length-zero generator " + gen.name + " moves the function");
  }
  return rep;
}

}  // namespace trigdunkl
