#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "trigdunkl/affine_weyl.hpp"
#include "trigdunkl/lattice.hpp"
#include "trigdunkl/orbits.hpp"
#include "trigdunkl/root_system.hpp"

namespace trigdunkl {

struct ReducedWord {
  std::vector<int> word;
  OmegaElement omega;
};

// Everything fixed by the choice (root system, translation lattice): the
// finite Weyl group enumeration, the simple affine letters, the length-zero
// subgroup, and the fundamental alcove geometry.
class Setting {
public:
  RootSystem rs;
  Lattice lat;
  OrbitData orbits;
  LetterSet letters;
  std::unique_ptr<OmegaGroup> omega;

  std::vector<SignedPerm> W;        // index 0 = identity
  std::vector<std::vector<int>> w_mul;
  std::vector<int> w_inv;
  std::vector<std::vector<int>> root_act;  // [w][r] = index of W[w](root r)
  int w0 = 0;                              // longest element

  RatMat central_dirs;     // rational basis of R^perp (ambient rows)
  RatMat fund_coweights;   // per finite letter, orthogonal to R^perp
  RatVec theta_coeffs;     // theta = sum_i c_i alpha_i
  RatMat alcove_vertices;  // 0 and omega_i^vee / c_i
  RatVec alcove_center;

  std::vector<std::vector<int>> braid_order;  // per letter pair; 0 = free

  int w_index(const SignedPerm& w) const;
  // Image of the W-enumeration index under composition with a letter
  // reflection on the left: index of s_{a_p} * W[i] for finite p.
  int letter_mul(int p, int i) const;

  ReducedWord reduced_word(const AffineWeylElement& g) const;
  AffineWeylElement realize(const ReducedWord& rw) const;

  Setting(const Setting&) = delete;
  Setting& operator=(const Setting&) = delete;
  Setting() = default;

private:
  std::map<SignedPerm, int> w_lookup_;
  friend std::unique_ptr<Setting> build_setting(RootKind, int, LatticeMode,
                                                const std::optional<RatMat>&);
};

std::unique_ptr<Setting> build_setting(RootKind kind, int rank, LatticeMode mode,
                                       const std::optional<RatMat>& custom_basis);

}  // namespace trigdunkl
