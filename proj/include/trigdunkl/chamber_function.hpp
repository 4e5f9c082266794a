#pragma once

#include <map>
#include <string>

#include "trigdunkl/chamber.hpp"
#include "trigdunkl/plane_wave.hpp"

namespace trigdunkl {

// Per-chamber expansions of a propagated function, lazily computed and
// cached with the convention: the expansion stored under key u describes
// the function on the chamber u^{-1}(C_+).
class ChamberData {
public:
  virtual ~ChamberData() = default;
  virtual const PlaneWaveVector& expansion(const AffineWeylElement& u) = 0;
  virtual const Setting& setting() const = 0;
  virtual const WaModule& module() const = 0;
  virtual const Multiplicity& mult() const = 0;

  // Locate v and evaluate the matching expansion.
  Vec evaluate(const std::vector<double>& v);
  // Expansion valid on the chamber c(C_+), i.e. the one keyed by c^{-1}.
  const PlaneWaveVector& chamber_expansion(const AffineWeylElement& c) {
    return expansion(c.inverse());
  }
};

// f equal to g on C_+, propagated to every chamber through the
// representation: f_{u^{-1}C_+} = (u^{-1} tensor u^{-1}) Q(u) g.  When all
// multiplicities vanish Q is the plain action and every chamber shares the
// expansion g bitwise.
class ChamberFunction : public ChamberData {
public:
  ChamberFunction(const Setting& st, const Multiplicity& mult, const WaModule& mod,
                  PlaneWaveVector g);
  const PlaneWaveVector& expansion(const AffineWeylElement& u) override;
  const Setting& setting() const override { return *st_; }
  const WaModule& module() const override { return *mod_; }
  const Multiplicity& mult() const override { return *mult_; }
  const PlaneWaveVector& base() const { return g_; }
  // Fault injection for tests: pin an arbitrary expansion under a key.
  void override_expansion(const AffineWeylElement& u, PlaneWaveVector f);

private:
  const Setting* st_;
  const Multiplicity* mult_;
  const WaModule* mod_;
  PlaneWaveVector g_;
  bool zero_k_;
  std::map<AffineWeylElement, PlaneWaveVector> cache_;
};

// The result of applying the Dunkl-type operator for a direction v to a
// chamber family: on the chamber keyed by w,
//   d_v f - sum_{a in Inv(w)} k_a (Da)(v) (s_a tensor s_a) f_{key w s_a}.
class DunklApplied : public ChamberData {
public:
  DunklApplied(ChamberData& parent, std::vector<double> v);
  const PlaneWaveVector& expansion(const AffineWeylElement& u) override;
  const Setting& setting() const override { return parent_->setting(); }
  const WaModule& module() const override { return parent_->module(); }
  const Multiplicity& mult() const override { return parent_->mult(); }

private:
  ChamberData* parent_;
  std::vector<double> v_;
  std::map<AffineWeylElement, PlaneWaveVector> cache_;
};

// Max residual of the order-r jump condition across the wall V_b of the
// chamber c(C_+), over the given on-wall points:
//   d^r f_C - d^r f_{s_b C} = ((-1)^r - 1) k_b s_b [ d^{r-1} f_C ]
// with d along Db^vee oriented toward C and s_b acting on module values.
double check_jump(ChamberData& f, const AffineWeylElement& c, const AffineRoot& b, int order,
                  const std::vector<std::vector<double>>& points);

// On-wall points for the wall of c(C_+) that is the image of a letter facet.
std::vector<std::vector<double>> chamber_wall_points(const Setting& st,
                                                     const AffineWeylElement& c, int letter,
                                                     int count, uint64_t seed);

struct HamiltonianReport {
  bool pass = false;
  double continuity_max = 0.0;
  double jump_max = 0.0;
  double eigen_dev = 0.0;
  cd eigenvalue;
  int chambers = 0;
  std::string diagnostic;
};

// Weak eigen-equation of the spectral Hamiltonian -Delta: each chamber
// expansion is an exact -Delta eigenfunction with eigenvalue -lambda^2
// checked through its plane-wave frequencies, and the degree <= 1 jump
// conditions hold across every wall of the listed chambers.
HamiltonianReport hamiltonian_residual(ChamberData& f,
                                       const std::vector<AffineWeylElement>& chambers,
                                       int points_per_wall, uint64_t seed, double tol);

struct WaInvarianceReport {
  bool pass = true;
  double max_residual = 0.0;
  std::vector<std::string> failures;
};

// Conditions for a globally W^a-invariant smooth extension of g from C_+:
// on each letter wall the module action of s_a fixes the boundary value and
// pins the normal derivative, and every length-zero generator fixes g.
WaInvarianceReport wa_invariance_check(const Setting& st, const Multiplicity& mult,
                                       const WaModule& mod, const PlaneWaveVector& g,
                                       int points_per_wall, uint64_t seed, double tol = 1e-9);

}  // namespace trigdunkl
