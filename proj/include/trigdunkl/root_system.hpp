#pragma once

#include <map>
#include <string>
#include <vector>

#include "trigdunkl/exactlin.hpp"
#include "trigdunkl/signed_perm.hpp"

namespace trigdunkl {

enum class RootKind { A, B, C, D };

RootKind parse_root_kind(const std::string& s);
char root_kind_char(RootKind k);

// Standard epsilon-coordinate realizations of the classical families.
// Type A_n lives non-spanning in R^{n+1}; B/C/D span R^n.  Roots are
// stored positives-first; the negative of root i is i + npos.
struct RootSystem {
  RootKind kind;
  int rank = 0;
  int dim = 0;
  int npos = 0;
  RatMat roots;
  RatMat coroots;               // 2a/<a,a>, integral in epsilon coordinates
  std::vector<int> simple;      // indices of the simple roots, all positive
  int theta = -1;               // index of the highest root
  std::vector<SignedPerm> refl;
  std::vector<int> worbit;      // finite W-orbit id per root
  int num_worbits = 0;
  std::vector<int> orbit_rep;   // lowest positive root index per orbit

  int nroots() const { return 2 * npos; }
  bool is_positive(int i) const { return i < npos; }
  int negate(int i) const { return i < npos ? i + npos : i - npos; }
  const RatVec& root(int i) const { return roots[i]; }
  const RatVec& coroot(int i) const { return coroots[i]; }
  Rat pair(int i, const RatVec& v) const { return dot(roots[i], v); }

  // Exact lookup; -1 when v is not a root.
  int index_of(const RatVec& v) const;
  // Index of w(roots[i]); throws if the image is not a root.
  int apply_index(const SignedPerm& w, int i) const;

private:
  std::map<RatVec, int> index_;
  friend RootSystem build_root_system(RootKind, int);
};

RootSystem build_root_system(RootKind kind, int rank);

}  // namespace trigdunkl
