#pragma once

#include <cstdint>
#include <vector>

#include "trigdunkl/setting.hpp"

namespace trigdunkl {

inline constexpr double kWallMargin = 1e-9;

// Small deterministic generator (splitmix64) so sampled points are
// reproducible across platforms for a fixed seed.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
};

struct ChamberLocation {
  AffineWeylElement u;                    // v lies in u(C_+)
  std::vector<double> fundamental_point;  // u^{-1}(v)
  double wall_distance;                   // min over letters of a(u^{-1} v)
};

// Alcove walk: reflect at the lowest negative letter until all letter
// values are positive.  Throws OnWallError when any letter value along the
// walk is within kWallMargin of zero.
ChamberLocation locate_chamber(const Setting& st, const std::vector<double>& v);

// All chambers whose closure contains v, treating |value| <= margin as
// lying on the wall; a single chamber for interior points.
std::vector<AffineWeylElement> locate_chambers_closed(const Setting& st,
                                                      const std::vector<double>& v,
                                                      double margin = kWallMargin);

// Random points in the relative interior of the fundamental wall of a
// letter (the facet of C_+ where the letter vanishes), with margin 1e-3
// from the lower-dimensional faces.  For a non-spanning root system the
// points also wander in the central directions.
std::vector<std::vector<double>> wall_samples(const Setting& st, int letter, int count,
                                              uint64_t seed);

}  // namespace trigdunkl
