// Compares the serial and OpenMP grid evaluation paths on a fixed A_2
// propagation problem: results must be byte-identical, timings are printed.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "trigdunkl/grid_eval.hpp"

using namespace trigdunkl;

int main(int argc, char** argv) {
  int steps = argc > 1 ? std::atoi(argv[1]) : 40;

  auto st = build_setting(RootKind::A, 2, LatticeMode::StandardZn, std::nullopt);
  Multiplicity mult = make_multiplicity(st->orbits, {cd(-0.65, 0.0)});
  WaModule mod = spin_module(*st, 2);
  SpectralParam lam =
      make_spectral(*st, {cd(0.31, 0.83), cd(-0.12, 0.41), cd(0.05, -0.67)});
  Vec m = Vec::Zero(mod.dim);
  m(0) = 1.0;
  m(3) = cd(0.4, 0.2);
  PlaneWaveVector g = psi_vector(*st, mult, mod, lam, m);

  GridSpec spec;
  spec.lo = {-1.1, -1.3, -0.9};
  spec.hi = {1.2, 1.15, 1.05};
  spec.steps = {steps, steps, 1};

  ChamberFunction f(*st, mult, mod, g);

  auto t0 = std::chrono::steady_clock::now();
  std::vector<GridRow> serial = grid_eval(f, spec, false);
  auto t1 = std::chrono::steady_clock::now();
  std::vector<GridRow> parallel = grid_eval(f, spec, true);
  auto t2 = std::chrono::steady_clock::now();

  std::string cs = grid_csv(serial, st->rs.dim, mod.dim);
  std::string cp = grid_csv(parallel, st->rs.dim, mod.dim);
  double ds = std::chrono::duration<double>(t1 - t0).count();
  double dp = std::chrono::duration<double>(t2 - t1).count();

#ifdef TRIGDUNKL_HAVE_OPENMP
  const char* par = "OpenMP";
#else
  const char* par = "serial fallback";
#endif
  std::cout << "rows:     " << serial.size() << "\n";
  std::cout << "serial:   " << ds << " s\n";
  std::cout << par << ": " << dp << " s (speedup " << ds / dp << "x)\n";
  if (cs != cp) {
    std::cout << "MISMATCH: serial and parallel output differ\n";
    return 1;
  }
  std::cout << "outputs byte-identical\n";
  return 0;
}
