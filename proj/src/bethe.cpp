#include "trigdunkl/bethe.hpp"

#include <cmath>
#include <numbers>

#include "trigdunkl/chamber.hpp"
#include "trigdunkl/errors.hpp"

namespace trigdunkl {

namespace {

constexpr double kImagTol = 1e-8;

// One factor ((z + k)/(z - k))^exponent of the closed translation cocycle,
// with z = lambda(a^vee).  A split orbit contributes both constants at half
// the exponent.
struct LogFactor {
  int root = 0;
  long long exponent = 0;
  std::vector<cd> ks;
};

struct LogSystem {
  int r = 0;
  Eigen::MatrixXd gram;                       // <y_i, b_j>
  std::vector<std::vector<LogFactor>> eqs;    // per lattice basis vector
  std::vector<std::vector<double>> coroot_p;  // per positive root: <b_j, a^vee>
};

LogSystem build_log_system(const Setting& st, const Multiplicity& mult) {
  LogSystem sys;
  sys.r = st.lat.rank;
  sys.gram.resize(sys.r, sys.r);
  for (int i = 0; i < sys.r; ++i)
    for (int j = 0; j < sys.r; ++j)
      sys.gram(i, j) = to_double(dot(st.lat.basis[i], st.lat.basis[j]));
  sys.coroot_p.resize(st.rs.npos);
  for (int ir = 0; ir < st.rs.npos; ++ir)
    for (int j = 0; j < sys.r; ++j)
      sys.coroot_p[ir].push_back(to_double(dot(st.lat.basis[j], st.rs.coroot(ir))));
  sys.eqs.resize(sys.r);
  for (int i = 0; i < sys.r; ++i) {
    for (int ir = 0; ir < st.rs.npos; ++ir) {
      long long e = st.lat.root_pairings[ir][i];
      if (e == 0) continue;
      LogFactor f;
      f.root = ir;
      int o = st.rs.worbit[ir];
      if (st.orbits.is_split(o)) {
        if (e % 2 != 0) throw std::logic_error("split orbit with odd pairing a(y)");
        f.exponent = e / 2;
        f.ks = {mult.k(st.orbits.class_base[o]), mult.k(st.orbits.class_base[o] + 1)};
      } else {
        f.exponent = e;
        f.ks = {mult.k(st.orbits.class_base[o])};
      }
      sys.eqs[i].push_back(f);
    }
  }
  return sys;
}

void margin_check(cd z, cd k) {
  double m = kGenericityMargin * std::max(1.0, std::abs(k));
  if (std::abs(z - k) <= m || std::abs(z + k) <= m)
    throw GenericityError("Bethe iterate left the generic region");
}

// G_i(x) = sum of principal logs of the translation cocycle factors minus
// lambda(y_i) minus 2 pi i q_i, where lambda = sum_j x_j b_j.
void eval_log_system(const LogSystem& sys, const std::vector<long long>& q, const Vec& x,
                     Vec* G, Mat* Jac) {
  int r = sys.r;
  G->setZero(r);
  if (Jac) Jac->setZero(r, r);
  for (int i = 0; i < r; ++i) {
    cd gi = 0.0;
    for (const LogFactor& f : sys.eqs[i]) {
      cd z = 0.0;
      for (int j = 0; j < r; ++j) z += x(j) * sys.coroot_p[f.root][j];
      for (cd k : f.ks) {
        margin_check(z, k);
        gi += static_cast<double>(f.exponent) * std::log((z + k) / (z - k));
        if (Jac) {
          cd dz = static_cast<double>(f.exponent) * (1.0 / (z + k) - 1.0 / (z - k));
          for (int j = 0; j < r; ++j) (*Jac)(i, j) += dz * sys.coroot_p[f.root][j];
        }
      }
    }
    for (int j = 0; j < r; ++j) {
      gi -= sys.gram(i, j) * x(j);
      if (Jac) (*Jac)(i, j) -= sys.gram(i, j);
    }
    long long qi = i < static_cast<int>(q.size()) ? q[i] : 0;
    gi -= cd(0.0, 2.0 * std::numbers::pi) * static_cast<double>(qi);
    (*G)(i) = gi;
  }
}

CVec ambient_from_x(const Setting& st, const Vec& x) {
  CVec lam(st.rs.dim, cd(0.0));
  for (int j = 0; j < st.lat.rank; ++j)
    for (int c = 0; c < st.rs.dim; ++c) lam[c] += x(j) * to_double(st.lat.basis[j][c]);
  return lam;
}

// Seed with lambda(y_i) near -2 pi i q_i, nudged so the coordinates start
// distinct and off the walls; an explicit ambient seed is projected onto
// the basis through its lattice pairings.
Vec seed_x(const Setting& st, const LogSystem& sys, const BaeProblem& problem) {
  int r = sys.r;
  Vec u(r);
  if (!problem.seed_lambda.empty()) {
    if (static_cast<int>(problem.seed_lambda.size()) != st.rs.dim)
      throw ConfigError("seed lambda has dimension " +
                        std::to_string(problem.seed_lambda.size()) + ", expected " +
                        std::to_string(st.rs.dim));
    for (int i = 0; i < r; ++i) {
      cd s = 0.0;
      for (int c = 0; c < st.rs.dim; ++c)
        s += problem.seed_lambda[c] * to_double(st.lat.basis[i][c]);
      u(i) = s;
    }
  } else {
    for (int i = 0; i < r; ++i) {
      long long qi = i < static_cast<int>(problem.q.size()) ? problem.q[i] : 0;
      u(i) = cd(0.0, -2.0 * std::numbers::pi * static_cast<double>(qi)) +
             cd(0.1, 0.037) * static_cast<double>(i + 1);
    }
  }
  Mat g = sys.gram.cast<cd>();
  return g.colPivHouseholderQr().solve(u);
}

// Stacked eigenvector system: rows rho(J_{t_{y_i}}) - e^{lambda(y_i)} I.
Mat stacked_system(const Setting& st, const Multiplicity& mult, const WaModule& mod,
                   const SpectralParam& lambda, std::vector<Mat>* transfer,
                   std::vector<cd>* eigenvalues) {
  int r = st.lat.rank;
  int d = mod.dim;
  Mat S(r * d, d);
  for (int i = 0; i < r; ++i) {
    GroupAlgebraElement J = j_element(st, mult, awe_translation(st.lat.basis[i]), lambda);
    Mat T = Mat::Zero(d, d);
    for (const auto& [g, c] : J.terms) T += c * mod.act(g);
    cd ev = std::exp(lambda.eval(st.lat.basis[i]));
    S.block(i * d, 0, d, d) = T - ev * Mat::Identity(d, d);
    if (transfer) transfer->push_back(T);
    if (eigenvalues) eigenvalues->push_back(ev);
  }
  return S;
}

}  // namespace

BaeReport bae_verify(const Setting& st, const Multiplicity& mult, const WaModule& mod,
                     const SpectralParam& lambda, const Vec& m, double tol) {
  BaeReport rep;
  rep.regular = is_generic(st, mult, lambda, true);
  rep.imaginary = true;
  for (cd c : lambda.lambda)
    if (std::abs(c.real()) > kImagTol) rep.imaginary = false;
  double mscale = std::max(1.0, m.lpNorm<Eigen::Infinity>());
  for (int i = 0; i < st.lat.rank; ++i) {
    GroupAlgebraElement J = j_element(st, mult, awe_translation(st.lat.basis[i]), lambda);
    Vec lhs = act_algebra(mod, J, m);
    cd ev = std::exp(lambda.eval(st.lat.basis[i]));
    double resid = (lhs - ev * m).lpNorm<Eigen::Infinity>() / mscale;
    rep.residuals.push_back(resid);
    rep.max_residual = std::max(rep.max_residual, resid);
  }
  rep.pass = rep.max_residual <= tol;
  return rep;
}

BaeSolution bae_solve_scalar(const Setting& st, const Multiplicity& mult,
                             const BaeProblem& problem) {
  int r = st.lat.rank;
  if (static_cast<int>(problem.q.size()) != r)
    throw ConfigError("need one quantum number per lattice basis vector (" +
                      std::to_string(r) + "), got " + std::to_string(problem.q.size()));
  LogSystem sys = build_log_system(st, mult);
  Vec x = seed_x(st, sys, problem);
  Vec G(r);
  Mat Jac(r, r);
  eval_log_system(sys, problem.q, x, &G, nullptr);
  double gn = G.lpNorm<Eigen::Infinity>();
  int it = 0;
  for (; it < problem.max_iter && gn >= 1e-12; ++it) {
    eval_log_system(sys, problem.q, x, &G, &Jac);
    Vec delta = Jac.colPivHouseholderQr().solve(-G);
    double t = 1.0;
    bool stepped = false;
    for (int h = 0; h < 20 && !stepped; ++h, t *= 0.5) {
      Vec xt = x + t * delta;
      try {
        Vec Gt(r);
        eval_log_system(sys, problem.q, xt, &Gt, nullptr);
        double gtn = Gt.lpNorm<Eigen::Infinity>();
        if (gtn < gn) {
          x = xt;
          gn = gtn;
          stepped = true;
        }
      } catch (const GenericityError&) {
        // stepped into a wall; shorten
      }
    }
    if (!stepped) throw SolverError("Bethe Newton found no descent after 20 halvings");
  }
  if (gn >= 1e-12)
    throw SolverError("Bethe Newton did not converge in " + std::to_string(problem.max_iter) +
                      " iterations (residual " + std::to_string(gn) + ")");
  BaeSolution sol;
  sol.iterations = it;
  sol.lambda = make_spectral(st, ambient_from_x(st, x));
  WaModule triv = trivial_module(st);
  sol.m = Vec::Ones(1);
  sol.report = bae_verify(st, mult, triv, sol.lambda, sol.m, problem.tol);
  if (!sol.report.pass)
    throw VerificationError("converged Bethe root fails the defining equations (residual " +
                            std::to_string(sol.report.max_residual) + ")");
  return sol;
}

Mat bae_joint_eigenspace(const Setting& st, const Multiplicity& mult, const WaModule& mod,
                         const SpectralParam& lambda) {
  int d = mod.dim;
  std::vector<Mat> T;
  std::vector<cd> ev;
  Mat S = stacked_system(st, mult, mod, lambda, &T, &ev);
  for (size_t i = 0; i < T.size(); ++i)
    for (size_t j = i + 1; j < T.size(); ++j) {
      double scale = std::max(1.0, T[i].norm() * T[j].norm());
      if ((T[i] * T[j] - T[j] * T[i]).norm() > 1e-10 * scale)
        throw VerificationError("transfer matrices fail to commute");
    }
  Eigen::JacobiSVD<Mat> svd(S, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  int count = 0;
  for (int idx = 0; idx < sv.size(); ++idx)
    if (sv(idx) <= 1e-8 * smax) ++count;
  Mat K(d, count);
  for (int c = 0; c < count; ++c) K.col(c) = svd.matrixV().col(d - count + c);
  return K;
}

std::vector<BaeSolution> bae_module_search(const Setting& st, const Multiplicity& mult,
                                           const WaModule& mod, const BaeProblem& problem,
                                           int num_seeds, uint64_t rng_seed) {
  int r = st.lat.rank;
  int d = mod.dim;
  LogSystem sys = build_log_system(st, mult);
  auto sigma_min = [&](const Vec& x) -> double {
    SpectralParam lam = make_spectral(st, ambient_from_x(st, x));
    Mat S = stacked_system(st, mult, mod, lam, nullptr, nullptr);
    Eigen::JacobiSVD<Mat> svd(S);
    return svd.singularValues()(svd.singularValues().size() - 1);
  };

  Vec base = seed_x(st, sys, problem);
  Rng rng(rng_seed);
  std::vector<BaeSolution> out;
  std::vector<Vec> accepted_x;
  for (int s = 0; s < num_seeds; ++s) {
    Vec x = base;
    if (s > 0)
      for (int j = 0; j < r; ++j)
        x(j) += cd(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7));
    try {
      double F = sigma_min(x);
      int it = 0;
      for (; it < problem.max_iter && F >= 1e-8; ++it) {
        // scalar Gauss-Newton on sigma_min over the 2r real coordinates
        Eigen::VectorXd grad(2 * r);
        const double h = 1e-6;
        for (int c = 0; c < 2 * r; ++c) {
          Vec xp = x;
          Vec xm = x;
          cd dh = c % 2 == 0 ? cd(h, 0.0) : cd(0.0, h);
          xp(c / 2) += dh;
          xm(c / 2) -= dh;
          grad(c) = (sigma_min(xp) - sigma_min(xm)) / (2 * h);
        }
        double g2 = grad.squaredNorm();
        if (g2 < 1e-24) break;
        Eigen::VectorXd step = -(F / g2) * grad;
        double t = 1.0;
        bool stepped = false;
        for (int hh = 0; hh < 20 && !stepped; ++hh, t *= 0.5) {
          Vec xt = x;
          for (int j = 0; j < r; ++j) xt(j) += t * cd(step(2 * j), step(2 * j + 1));
          try {
            double Ft = sigma_min(xt);
            if (Ft < F) {
              x = xt;
              F = Ft;
              stepped = true;
            }
          } catch (const GenericityError&) {
          }
        }
        if (!stepped) break;
      }
      if (F >= 1e-8) continue;
      bool dup = false;
      for (const Vec& ax : accepted_x)
        if ((x - ax).lpNorm<Eigen::Infinity>() < 1e-6) dup = true;
      if (dup) continue;
      SpectralParam lam = make_spectral(st, ambient_from_x(st, x));
      Mat S = stacked_system(st, mult, mod, lam, nullptr, nullptr);
      Eigen::JacobiSVD<Mat> svd(S, Eigen::ComputeFullV);
      Vec m = svd.matrixV().col(d - 1);
      BaeReport rep = bae_verify(st, mult, mod, lam, m, problem.tol);
      if (!rep.pass) continue;
      BaeSolution sol;
      sol.lambda = lam;
      sol.m = m;
      sol.report = rep;
      sol.iterations = it;
      out.push_back(sol);
      accepted_x.push_back(x);
    } catch (const GenericityError&) {
      // seed drifted onto a wall; try the next one
    }
  }
  return out;
}

RealityVerdict repulsive_reality_filter(const Setting& st, const Multiplicity& mult,
                                        const WaModule& mod, const BaeSolution& sol) {
  (void)st;
  RealityVerdict v;
  if (!mod.unitary) {
    v.reason = "module is not unitary";
    return v;
  }
  if (!mult.all_real()) {
    v.reason = "multiplicities are not all real";
    return v;
  }
  for (cd k : mult.k_class)
    if (k.real() >= 0.0) {
      v.reason = "multiplicities are not all negative";
      return v;
    }
  v.applicable = true;
  for (size_t j = 0; j < sol.lambda.lambda.size(); ++j)
    if (std::abs(sol.lambda.lambda[j].real()) > kImagTol) {
      v.accepted = false;
      v.reason = "lambda[" + std::to_string(j) + "] has real part " +
                 std::to_string(sol.lambda.lambda[j].real());
      return v;
    }
  v.reason = "spectral parameter is purely imaginary";
  return v;
}

cd coefficient_function(const PlaneWaveVector& g, const Multiplicity& mult, int w_idx,
                        const AffineWeylElement& u) {
  if (g.mod->dim != 1)
    throw std::logic_error("coefficient_function requires a one-dimensional module");
  PlaneWaveVector h = q_element(g, u, mult);
  return h.coef[w_idx](0);
}

}  // namespace trigdunkl
