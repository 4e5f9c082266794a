#include "trigdunkl/orbits.hpp"

#include <cmath>
#include <numeric>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

OrbitData classify_orbits(const RootSystem& rs, const Lattice& lat) {
  OrbitData od;
  od.orbit_d.assign(rs.num_worbits, 0);
  for (int o = 0; o < rs.num_worbits; ++o) {
    long long g = 0;
    // d_O is an orbit invariant; the representative suffices, but fold in
    // every root of the orbit anyway so the invariance is not assumed.
    for (int i = 0; i < rs.nroots(); ++i) {
      if (rs.worbit[i] != o) continue;
      for (long long p : lat.root_pairings[i]) g = std::gcd(g, std::llabs(p));
    }
    od.orbit_d[o] = static_cast<int>(g);
    if (g != 1 && g != 2) throw LatticeError("orbit pairing gcd is not 1 or 2");
  }
  od.class_base.assign(rs.num_worbits, 0);
  int next = 0;
  for (int o = 0; o < rs.num_worbits; ++o) {
    od.class_base[o] = next;
    next += (od.orbit_d[o] == 2) ? 2 : 1;
  }
  od.num_classes = next;
  od.theta_period = od.orbit_d[rs.worbit[rs.theta]];
  return od;
}

int OrbitData::class_of(const RootSystem& rs, int root_index, long long m) const {
  int o = rs.worbit[root_index];
  if (orbit_d[o] == 1) return class_base[o];
  long long r = ((m % 2) + 2) % 2;
  return class_base[o] + static_cast<int>(r);
}

int OrbitData::class_of_a0(const RootSystem& rs) const {
  return class_of(rs, rs.negate(rs.theta), 1);
}

std::string OrbitData::class_name(const RootSystem& rs, int class_id) const {
  for (int o = 0; o < rs.num_worbits; ++o) {
    int base = class_base[o];
    int n = (orbit_d[o] == 2) ? 2 : 1;
    if (class_id < base || class_id >= base + n) continue;
    std::string name = "orbit" + std::to_string(o);
    if (n == 2) name += (class_id == base) ? ":even" : ":odd";
    return name;
  }
  throw ConfigError("invalid affine class id " + std::to_string(class_id));
}

bool Multiplicity::all_zero() const {
  for (const cd& v : k_class)
    if (v != cd(0.0, 0.0)) return false;
  return true;
}

bool Multiplicity::all_real() const {
  for (const cd& v : k_class)
    if (v.imag() != 0.0) return false;
  return true;
}

double Multiplicity::max_abs() const {
  double m = 0.0;
  for (const cd& v : k_class) m = std::max(m, std::abs(v));
  return m;
}

Multiplicity make_multiplicity(const OrbitData& od, const std::vector<cd>& values) {
  Multiplicity mult;
  if (static_cast<int>(values.size()) == 1) {
    mult.k_class.assign(od.num_classes, values[0]);
  } else if (static_cast<int>(values.size()) == od.num_classes) {
    mult.k_class = values;
  } else {
    throw ConfigError("multiplicity list has " + std::to_string(values.size()) +
                      " entries but there are " + std::to_string(od.num_classes) +
                      " affine classes (give one value per class, or a single value)");
  }
  return mult;
}

}  // namespace trigdunkl
