#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigdunkl/exactlin.hpp"
#include "trigdunkl/root_system.hpp"

namespace trigdunkl {

enum class LatticeMode { CorootLattice, StandardZn, Custom };

LatticeMode parse_lattice_mode(const std::string& s);
std::string lattice_mode_name(LatticeMode m);

// Translation lattice Y: a free Z-module spanned by `basis` rows (ambient
// coordinates), validated to satisfy Q^vee <= Y and a(Y) <= Z for all roots a.
struct Lattice {
  LatticeMode mode;
  RatMat basis;   // rank x dim, rows linearly independent
  int rank = 0;
  int dim = 0;

  bool contains(const RatVec& y) const;
  // Coordinates of y in the basis; throws LatticeError when y is not in Y.
  IntVec to_coords(const RatVec& y) const;
  RatVec from_coords(const IntVec& c) const;

  // Per root index: the value a(b_j) on each basis vector (always integral).
  IntMat root_pairings;   // nroots x rank
  // Per root index of a simple root position p: coords of simple coroot p.
  IntMat simple_coroot_coords;  // rank(R) x rank(Y)
};

Lattice build_lattice(const RootSystem& rs, LatticeMode mode,
                      const std::optional<RatMat>& custom_basis);

}  // namespace trigdunkl
