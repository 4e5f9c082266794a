#pragma once

#include <complex>
#include <string>
#include <vector>

#include "trigdunkl/lattice.hpp"
#include "trigdunkl/root_system.hpp"

namespace trigdunkl {

using cd = std::complex<double>;

// W^a-orbits of affine roots a + m, classified by the finite W-orbit of the
// gradient together with m modulo d_O, where d_O = gcd of a(Y) over the
// orbit.  Since a(a^vee) = 2 and a(Y) <= Z, d_O is 1 or 2; an orbit with
// d_O = 2 carries two affine classes (even m and odd m).
struct OrbitData {
  std::vector<int> orbit_d;     // per finite W-orbit
  std::vector<int> class_base;  // per finite W-orbit: first affine class id
  int num_classes = 0;
  int theta_period = 1;         // d of the orbit of the highest root

  int class_of(const RootSystem& rs, int root_index, long long m) const;
  int class_of_a0(const RootSystem& rs) const;  // class of -theta + 1
  bool is_split(int worbit) const { return orbit_d[worbit] == 2; }
  std::string class_name(const RootSystem& rs, int class_id) const;
};

OrbitData classify_orbits(const RootSystem& rs, const Lattice& lat);

// One multiplicity value per affine class, invariant under W^a and negation
// by construction.
struct Multiplicity {
  std::vector<cd> k_class;

  cd k(int class_id) const { return k_class[class_id]; }
  cd k_affine(const RootSystem& rs, const OrbitData& od, int root_index, long long m) const {
    return k_class[od.class_of(rs, root_index, m)];
  }
  bool all_zero() const;
  bool all_real() const;
  double max_abs() const;
};

Multiplicity make_multiplicity(const OrbitData& od, const std::vector<cd>& values);

}  // namespace trigdunkl
