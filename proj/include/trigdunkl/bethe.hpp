#pragma once

#include <cstdint>

#include "trigdunkl/plane_wave.hpp"

namespace trigdunkl {

// One equation per lattice basis vector y_i: rho(J_{t_{y_i}}(lambda)) m =
// e^{lambda(y_i)} m.
struct BaeReport {
  std::vector<double> residuals;
  double max_residual = 0.0;
  bool pass = false;
  bool regular = false;    // lambda in C_k^reg
  bool imaginary = false;  // all coordinates within 1e-8 of purely imaginary
};

BaeReport bae_verify(const Setting& st, const Multiplicity& mult, const WaModule& mod,
                     const SpectralParam& lambda, const Vec& m, double tol = 1e-10);

struct BaeProblem {
  std::vector<long long> q;  // quantum numbers, one per lattice basis vector
  CVec seed_lambda;          // optional ambient seed; empty for the default
  int max_iter = 100;
  double tol = 1e-10;
};

struct BaeSolution {
  SpectralParam lambda;
  Vec m;
  BaeReport report;
  int iterations = 0;
};

// Scalar (trivial module) solver: damped Newton on the logarithmic system
// G_i = log j_{y_i}(lambda) - lambda(y_i) - 2 pi i q_i with per-factor
// principal branches, in the unknowns x with lambda = sum_j x_j b_j.
BaeSolution bae_solve_scalar(const Setting& st, const Multiplicity& mult,
                             const BaeProblem& problem);

// Transfer matrices rho(J_{t_{y_i}}(lambda)) on the module; commutation is
// asserted.  Returns an orthonormal basis of the joint eigenspace with
// eigenvalues e^{lambda(y_i)} (columns; zero columns when empty).
Mat bae_joint_eigenspace(const Setting& st, const Multiplicity& mult, const WaModule& mod,
                         const SpectralParam& lambda);

// Seeded search for module solutions: damped Gauss-Newton on the smallest
// singular value of the stacked eigenvector system.  Seeds that drift out
// of genericity are skipped.
std::vector<BaeSolution> bae_module_search(const Setting& st, const Multiplicity& mult,
                                           const WaModule& mod, const BaeProblem& problem,
                                           int num_seeds, uint64_t rng_seed);

struct RealityVerdict {
  bool applicable = false;
  bool accepted = true;
  std::string reason;
};

// For a unitary module with all multiplicities real and negative, solutions
// must have purely imaginary spectral parameters; others pass through.
RealityVerdict repulsive_reality_filter(const Setting& st, const Multiplicity& mult,
                                        const WaModule& mod, const BaeSolution& sol);

// Coefficient of e^{w lambda} in Q(u) g for the trivial module.
cd coefficient_function(const PlaneWaveVector& g, const Multiplicity& mult, int w_idx,
                        const AffineWeylElement& u);

}  // namespace trigdunkl
