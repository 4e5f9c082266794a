#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <memory>
#include <set>
#include <vector>

#include "test_util.hpp"
#include "trigdunkl/chamber.hpp"
#include "trigdunkl/chamber_function.hpp"
#include "trigdunkl/errors.hpp"
#include "trigdunkl/grid_eval.hpp"
#include "trigdunkl/plane_wave.hpp"
#include "trigdunkl/setting.hpp"
#include "trigdunkl/wa_module.hpp"

using namespace trigdunkl;

namespace {

struct Sys {
  std::unique_ptr<Setting> st;
  Multiplicity mult;
};

Sys sys(RootKind kind, int rank, LatticeMode mode, std::vector<cd> kv) {
  Sys s;
  s.st = build_setting(kind, rank, mode, std::nullopt);
  s.mult = make_multiplicity(s.st->orbits, kv);
  return s;
}

PlaneWaveVector random_pwv(const Setting& st, const WaModule& mod, const SpectralParam& sp,
                           Rng& rng) {
  PlaneWaveVector f = pw_zero(st, mod, sp);
  for (auto& c : f.coef)
    for (int i = 0; i < mod.dim; ++i) c(i) = cd(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return f;
}

Vec random_vec(Rng& rng, int dim) {
  Vec m = Vec::Zero(dim);
  for (int i = 0; i < dim; ++i) m(i) = cd(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return m;
}

double rel(double err, double scale) { return err / std::max(1.0, scale); }

}  // namespace

TEST_CASE("chamber location round trips") {
  Sys s = sys(RootKind::A, 2, LatticeMode::StandardZn, {cd(0.3, 0.0)});
  const auto& st = *s.st;
  Rng rng(0xdd01);

  std::vector<double> center(st.rs.dim);
  for (int i = 0; i < st.rs.dim; ++i) center[i] = to_double(st.alcove_center[i]);
  CHECK(locate_chamber(st, center).u.is_identity());

  for (int rep = 0; rep < 40; ++rep) {
    std::vector<double> v(st.rs.dim);
    for (auto& c : v) c = rng.uniform(-3, 3);
    ChamberLocation loc;
    try {
      loc = locate_chamber(st, v);
    } catch (const OnWallError&) {
      continue;
    }
    CHECK(loc.wall_distance > 0.0);
    for (int i = 0; i < st.letters.size(); ++i)
      CHECK(aroot_eval(st.rs, st.letters.letters[i], loc.fundamental_point) > 0.0);
    std::vector<double> back = loc.u.act_point(loc.fundamental_point);
    for (int i = 0; i < st.rs.dim; ++i) CHECK(std::abs(back[i] - v[i]) < 1e-12);
  }

  SUBCASE("translated alcove centers land on the translation") {
    IntVec c(st.lat.rank, 0);
    c[0] = 2;
    c[1] = -1;
    RatVec y = st.lat.from_coords(c);
    std::vector<double> moved = center;
    for (int i = 0; i < st.rs.dim; ++i) moved[i] += to_double(y[i]);
    CHECK(locate_chamber(st, moved).u == awe_translation(y));
  }

  SUBCASE("points on a wall throw") {
    // theta(v) = 1 puts v on the affine wall of the zeroth letter.
    std::vector<double> v = {0.5, -0.25, -0.5};
    CHECK_THROWS_AS(locate_chamber(st, v), OnWallError);
    std::vector<double> w = {0.3, 0.3, -0.6};
    CHECK_THROWS_AS(locate_chamber(st, w), OnWallError);
  }

  SUBCASE("closed location counts adjacent chambers") {
    CHECK(locate_chambers_closed(st, center).size() == 1);
    std::vector<double> wall = {0.1, 0.1, -0.2};
    CHECK(locate_chambers_closed(st, wall).size() == 2);
    std::vector<double> origin = {0.0, 0.0, 0.0};
    auto at_origin = locate_chambers_closed(st, origin);
    CHECK(at_origin.size() == st.W.size());
    std::set<AffineWeylElement> uniq(at_origin.begin(), at_origin.end());
    CHECK(uniq.size() == at_origin.size());

    Sys r1 = sys(RootKind::A, 1, LatticeMode::StandardZn, {cd(0.3, 0.0)});
    std::vector<double> o1 = {0.0, 0.0};
    CHECK(locate_chambers_closed(*r1.st, o1).size() == 2);
  }
}

TEST_CASE("zero multiplicity shares one expansion by reference") {
  Sys s = sys(RootKind::A, 2, LatticeMode::StandardZn, {cd(0.0, 0.0)});
  const auto& st = *s.st;
  CVec t = {cd(0.2, 0.1), cd(-0.1, 0.3), cd(0.0, -0.2)};
  WaModule ps = principal_series_module(st, t);
  Rng rng(0xdd02);
  SpectralParam sp = testutil::separated_lambda(st, s.mult, rng);
  PlaneWaveVector g = random_pwv(st, ps, sp, rng);
  ChamberFunction f(st, s.mult, ps, g);

  std::vector<AffineWeylElement> keys;
  keys.push_back(awe_identity(st.rs.dim));
  for (int i = 0; i < st.letters.size(); ++i) keys.push_back(st.letters.refl[i]);
  keys.push_back(st.letters.refl[0].compose(st.letters.refl[1]));
  for (const auto& u : keys) CHECK(&f.expansion(u) == &f.base());

  for (const auto& c : keys) {
    for (int i = 0; i < st.letters.size(); ++i) {
      AffineRoot b = act_aroot(st.rs, c, st.letters.letters[i]);
      auto pts = chamber_wall_points(st, c, i, 6, 0xdd03);
      for (int order = 0; order <= 3; ++order)
        CHECK(check_jump(f, c, b, order, pts) == 0.0);
    }
  }

  HamiltonianReport rep = hamiltonian_residual(f, keys, 6, 0xdd04, 1e-8);
  CHECK(rep.pass);
  CHECK(rep.continuity_max == 0.0);
  CHECK(rep.jump_max == 0.0);
  CHECK(rep.eigen_dev < 1e-12);
  CHECK(std::abs(rep.eigenvalue + sp.lambda_sq()) < 1e-14);
  CHECK(rep.chambers == static_cast<int>(keys.size()));
}

TEST_CASE("expansions follow the representation") {
  Sys s = sys(RootKind::A, 1, LatticeMode::StandardZn, {cd(0.45, 0.0)});
  const auto& st = *s.st;
  WaModule triv = trivial_module(st);
  Rng rng(0xdd05);
  SpectralParam sp = testutil::separated_lambda(st, s.mult, rng);
  PlaneWaveVector g = random_pwv(st, triv, sp, rng);
  ChamberFunction f(st, s.mult, triv, g);

  std::vector<AffineWeylElement> keys;
  for (int i = 0; i < st.letters.size(); ++i) keys.push_back(st.letters.refl[i]);
  keys.push_back(st.omega->table_element(1));
  for (int rep = 0; rep < 10; ++rep) keys.push_back(testutil::random_element(st, rng, 4, true));

  for (const auto& u : keys) {
    PlaneWaveVector want = apply_group(q_element(g, u, s.mult), u.inverse());
    CHECK(rel(f.expansion(u).max_abs_diff(want), want.max_abs()) < 1e-12);
  }
}

TEST_CASE("eigenfunction jump conditions hold through order three") {
  std::vector<Sys> systems;
  systems.push_back(sys(RootKind::A, 1, LatticeMode::StandardZn, {cd(-1.0, 0.0)}));
  systems.push_back(sys(RootKind::A, 2, LatticeMode::StandardZn, {cd(-0.3, 0.2)}));

  Rng rng(0xdd06);
  for (auto& s : systems) {
    const auto& st = *s.st;
    CVec t(st.W.size());
    for (size_t i = 0; i < t.size(); ++i) t[i] = cd(0.12 * (double)i - 0.2, 0.07 * (double)i);
    WaModule ps = principal_series_module(st, t);
    SpectralParam sp = testutil::separated_lambda(st, s.mult, rng, 0.1, 1.2);
    Vec m = random_vec(rng, ps.dim);
    ChamberFunction f(st, s.mult, ps, psi_vector(st, s.mult, ps, sp, m));

    std::vector<AffineWeylElement> chambers;
    chambers.push_back(awe_identity(st.rs.dim));
    chambers.push_back(st.letters.refl[0]);
    chambers.push_back(st.letters.refl[st.letters.size() - 1].compose(st.letters.refl[0]));

    uint64_t salt = 0;
    for (const auto& c : chambers)
      for (int i = 0; i < st.letters.size(); ++i) {
        AffineRoot b = act_aroot(st.rs, c, st.letters.letters[i]);
        auto pts = chamber_wall_points(st, c, i, 20, 0xdd07 + salt++);
        for (int order = 0; order <= 3; ++order) {
          double r = check_jump(f, c, b, order, pts);
          CAPTURE(order);
          CHECK(r < 1e-8);
        }
      }

    HamiltonianReport rep = hamiltonian_residual(f, chambers, 15, 0xdd08, 1e-8);
    CHECK(rep.pass);
    CHECK(std::abs(rep.eigenvalue + sp.lambda_sq()) < 1e-13);
    CHECK(rep.eigen_dev < 1e-10);
  }
}

TEST_CASE("check_jump rejects a root that is not a wall") {
  Sys s = sys(RootKind::A, 2, LatticeMode::StandardZn, {cd(0.2, 0.0)});
  const auto& st = *s.st;
  WaModule triv = trivial_module(st);
  Rng rng(0xdd09);
  SpectralParam sp = testutil::separated_lambda(st, s.mult, rng);
  ChamberFunction f(st, s.mult, triv, pw_basis(st, triv, sp, 0, Vec::Ones(1)));
  // theta + 5 is no wall of the fundamental alcove.
  AffineRoot far{st.rs.theta, 5};
  auto pts = wall_samples(st, 0, 3, 1);
  CHECK_THROWS_AS(check_jump(f, awe_identity(st.rs.dim), far, 0, pts), GeometryError);
}

TEST_CASE("Dunkl operators commute chamberwise") {
  Sys s = sys(RootKind::A, 2, LatticeMode::StandardZn, {cd(-0.35, 0.15)});
  const auto& st = *s.st;
  WaModule spin = spin_module(st, 2);
  Rng rng(0xdd0a);
  SpectralParam sp = testutil::separated_lambda(st, s.mult, rng);
  PlaneWaveVector g = random_pwv(st, spin, sp, rng);
  ChamberFunction f(st, s.mult, spin, g);

  std::vector<AffineWeylElement> keys;
  keys.push_back(awe_identity(st.rs.dim));
  for (int i = 0; i < st.letters.size(); ++i) keys.push_back(st.letters.refl[i]);
  for (int rep = 0; rep < 6; ++rep) keys.push_back(testutil::random_element(st, rng, 4, false));

  SUBCASE("identity chamber reduces to the plain derivative") {
    std::vector<double> v = {0.7, -0.2, 0.4};
    DunklApplied df(f, v);
    PlaneWaveVector want = apply_deriv(f.expansion(awe_identity(st.rs.dim)), v);
    CHECK(df.expansion(awe_identity(st.rs.dim)).max_abs_diff(want) < 1e-14);
  }

  SUBCASE("commutators vanish") {
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<double> v(st.rs.dim), w(st.rs.dim);
      for (auto& c : v) c = rng.uniform(-1, 1);
      for (auto& c : w) c = rng.uniform(-1, 1);
      DunklApplied dv(f, v);
      DunklApplied dvw(dv, w);
      DunklApplied dw(f, w);
      DunklApplied dwv(dw, v);
      for (const auto& u : keys) {
        double diff = dvw.expansion(u).max_abs_diff(dwv.expansion(u));
        CHECK(rel(diff, dvw.expansion(u).max_abs()) < 1e-10);
      }
    }
  }
}

TEST_CASE("fault injection trips the continuity check") {
  Sys s = sys(RootKind::A, 2, LatticeMode::StandardZn, {cd(-0.3, 0.2)});
  const auto& st = *s.st;
  CVec t = {cd(0.2, 0.1), cd(-0.1, 0.3), cd(0.0, -0.2), cd(0.3, 0.0), cd(-0.25, 0.1), cd(0.1, 0.2)};
  WaModule ps = principal_series_module(st, t);
  Rng rng(0xdd0b);
  SpectralParam sp = testutil::separated_lambda(st, s.mult, rng);
  Vec m = random_vec(rng, ps.dim);
  ChamberFunction f(st, s.mult, ps, psi_vector(st, s.mult, ps, sp, m));

  std::vector<AffineWeylElement> chambers = {awe_identity(st.rs.dim), st.letters.refl[0]};
  CHECK(hamiltonian_residual(f, chambers, 10, 0xdd0c, 1e-8).pass);

  f.override_expansion(st.letters.refl[0], random_pwv(st, ps, sp, rng));
  HamiltonianReport rep = hamiltonian_residual(f, chambers, 10, 0xdd0c, 1e-8);
  CHECK_FALSE(rep.pass);
  CHECK(rep.diagnostic.find("continuity") != std::string::npos);
}

TEST_CASE("invariance check accepts periodic data and rejects generic data") {
  Sys s = sys(RootKind::A, 1, LatticeMode::StandardZn, {cd(0.0, 0.0)});
  const auto& st = *s.st;
  WaModule triv = trivial_module(st);
  Vec one = Vec::Ones(1);
  double pi = std::acos(-1.0);

  // The length-zero generator translates by a single lattice vector, so
  // full invariance needs lambda integral against Y, not just against Q^vee.
  SpectralParam good = make_spectral(st, {cd(0.0, 2 * pi), cd(0.0, -2 * pi)});
  PlaneWaveVector psi = psi_vector(st, s.mult, triv, good, one);
  WaInvarianceReport rep = wa_invariance_check(st, s.mult, triv, psi, 10, 0xdd0d);
  CHECK(rep.pass);
  CHECK(rep.max_residual < 1e-10);

  SpectralParam bad = make_spectral(st, {cd(0.6, 0.4), cd(-0.6, -0.4)});
  PlaneWaveVector off = psi_vector(st, s.mult, triv, bad, one);
  WaInvarianceReport rep2 = wa_invariance_check(st, s.mult, triv, off, 10, 0xdd0d);
  CHECK_FALSE(rep2.pass);
  CHECK_FALSE(rep2.failures.empty());

  SUBCASE("finite walls pass for any multiplicity, the affine wall filters") {
    Sys sk = sys(RootKind::A, 1, LatticeMode::StandardZn, {cd(0.45, 0.0)});
    WaModule triv2 = trivial_module(*sk.st);
    Rng rng(0xdd0e);
    SpectralParam sp = testutil::separated_lambda(*sk.st, sk.mult, rng);
    PlaneWaveVector p2 = psi_vector(*sk.st, sk.mult, triv2, sp, one);
    WaInvarianceReport r3 = wa_invariance_check(*sk.st, sk.mult, triv2, p2, 8, 0xdd0f);
    CHECK_FALSE(r3.pass);
    for (const std::string& what : r3.failures) {
      bool finite_wall_failure = false;
      for (int p = 0; p < sk.st->rs.rank; ++p)
        if (what.find("letter " + std::to_string(p) + " ") != std::string::npos)
          finite_wall_failure = true;
      CHECK_FALSE(finite_wall_failure);
    }
  }
}

TEST_CASE("grid evaluation is deterministic and wall aware") {
  Sys s = sys(RootKind::A, 1, LatticeMode::StandardZn, {cd(0.4, 0.0)});
  const auto& st = *s.st;
  WaModule triv = trivial_module(st);
  Rng rng(0xdd10);
  SpectralParam sp = testutil::separated_lambda(st, s.mult, rng);
  ChamberFunction f(st, s.mult, triv, psi_vector(st, s.mult, triv, sp, Vec::Ones(1)));

  SUBCASE("interior grid yields one row per point") {
    GridSpec spec{{-1.23, -1.11}, {1.31, 1.17}, {6, 5}};
    auto pts = grid_points(spec);
    CHECK(pts.size() == 42);
    CHECK(pts[0][0] == pts[1][0]);  // last axis moves fastest
    CHECK(pts[0][1] != pts[1][1]);

    auto serial = grid_eval(f, spec, false);
    CHECK(serial.size() == pts.size());
    auto parallel = grid_eval(f, spec, true);
    std::string cs = grid_csv(serial, 2, 1);
    std::string cp = grid_csv(parallel, 2, 1);
    CHECK(cs == cp);
    CHECK(cs == grid_csv(grid_eval(f, spec, false), 2, 1));
    CHECK(cs.rfind("x0,x1,re0,im0,chamber", 0) == 0);
  }

  SUBCASE("on-wall points expand into one row per adjacent chamber") {
    GridSpec spec{{0.0, 0.0}, {1.0, 1.0}, {2, 2}};
    auto rows = grid_eval(f, spec, false);
    CHECK(rows.size() > 9);
    size_t doubled = 0;
    for (size_t i = 0; i + 1 < rows.size(); ++i)
      if (rows[i].x == rows[i + 1].x) {
        ++doubled;
        CHECK(rows[i].chamber != rows[i + 1].chamber);
      }
    CHECK(doubled == rows.size() - 9);
  }
}

TEST_CASE("wall samples stay on their wall with interior margins") {
  std::vector<Sys> systems;
  systems.push_back(sys(RootKind::A, 2, LatticeMode::StandardZn, {cd(0.3, 0.0)}));
  systems.push_back(
      sys(RootKind::B, 2, LatticeMode::CorootLattice, {cd(0.3, 0.0), cd(0.2, 0.0), cd(0.25, 0.0)}));

  for (auto& s : systems) {
    const auto& st = *s.st;
    for (int letter = 0; letter < st.letters.size(); ++letter) {
      auto pts = wall_samples(st, letter, 12, 0xdd11);
      CHECK(pts.size() == 12);
      for (const auto& p : pts) {
        CHECK(std::abs(aroot_eval(st.rs, st.letters.letters[letter], p)) < 1e-12);
        for (int other = 0; other < st.letters.size(); ++other) {
          if (other == letter) continue;
          CHECK(aroot_eval(st.rs, st.letters.letters[other], p) > 5e-4);
        }
      }
      auto again = wall_samples(st, letter, 12, 0xdd11);
      CHECK(pts == again);
      auto moved = wall_samples(st, letter, 12, 0xdd12);
      CHECK(pts != moved);
    }
  }
}
