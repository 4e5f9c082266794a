#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trigdunkl/exactlin.hpp"
#include "trigdunkl/lattice.hpp"
#include "trigdunkl/root_system.hpp"
#include "trigdunkl/signed_perm.hpp"

namespace trigdunkl {

// Affine root a + m*delta, stored as (finite root index, integer offset m).
struct AffineRoot {
  int root = 0;
  long long m = 0;
  bool operator==(const AffineRoot&) const = default;
  auto operator<=>(const AffineRoot&) const = default;
};

// Element w t_y of W ltimes Y acting by v |-> w(v + y).
struct AffineWeylElement {
  SignedPerm w;
  RatVec y;

  bool operator==(const AffineWeylElement&) const = default;
  bool operator<(const AffineWeylElement& o) const {
    if (w < o.w) return true;
    if (o.w < w) return false;
    return y < o.y;
  }
  bool is_identity() const;
  bool is_translation() const { return w.is_identity(); }
  AffineWeylElement compose(const AffineWeylElement& o) const;
  AffineWeylElement inverse() const;
  RatVec act_point(const RatVec& v) const;
  std::vector<double> act_point(const std::vector<double>& v) const;
};

AffineWeylElement awe_identity(int dim);
AffineWeylElement awe_translation(RatVec y);
AffineWeylElement awe_from(SignedPerm w, RatVec y);

bool aroot_positive(const RootSystem& rs, const AffineRoot& a);
// 0 for positive gradient, 1 for negative; the degree offset in the length
// and inversion formulas.
int aroot_B(const RootSystem& rs, int root_index);
// Value a(v) + m of the affine functional at a point.
Rat aroot_eval(const RootSystem& rs, const AffineRoot& a, const RatVec& v);
double aroot_eval(const RootSystem& rs, const AffineRoot& a, const std::vector<double>& v);
AffineRoot aroot_negate(const RootSystem& rs, const AffineRoot& a);

// g(a + m) = w(a) + (m - a(y)) for g = w t_y.
AffineRoot act_aroot(const RootSystem& rs, const AffineWeylElement& g, const AffineRoot& a);
// s_{a+m} = s_a t_{m a^vee}.
AffineWeylElement aroot_reflection(const RootSystem& rs, const AffineRoot& a);

long long length(const RootSystem& rs, const AffineWeylElement& g);
std::vector<AffineRoot> inversion_set(const RootSystem& rs, const AffineWeylElement& g);
bool left_descent(const RootSystem& rs, const AffineWeylElement& g, const AffineRoot& a);

// Simple affine letters: index i < rank is the finite simple root a_i,
// index rank is a_0 = -theta + 1.
struct LetterSet {
  std::vector<AffineRoot> letters;
  std::vector<AffineWeylElement> refl;
  int size() const { return static_cast<int>(letters.size()); }
  int index_of(const AffineRoot& a) const;  // -1 when a is not a letter
};
LetterSet affine_letters(const RootSystem& rs);

// Greedy left-descent peeling, lowest letter first.  Returns the word and
// the length-zero remainder: g = s_{word[0]} ... s_{word.back()} * rem.
std::pair<std::vector<int>, AffineWeylElement> peel_word(const RootSystem& rs,
                                                         const LetterSet& ls,
                                                         const AffineWeylElement& g);

// The length-zero subgroup.  Its torsion part, the image of Y/(Q^vee + Y_c)
// with Y_c = Y cap R^perp, is tabulated; central translations (Y_c) extend
// it when Y_c is not already generated by products of table generators.
struct OmegaElement {
  int index = 0;   // torsion table index
  IntVec central;  // coordinates in the central basis, empty when Y_c = 0
  bool operator==(const OmegaElement&) const = default;
};

class OmegaGroup {
public:
  OmegaGroup(const RootSystem& rs, const Lattice& lat);

  int table_size() const { return static_cast<int>(table_.size()); }
  int central_rank() const { return static_cast<int>(central_basis_.size()); }
  const AffineWeylElement& table_element(int i) const { return table_[i]; }
  const RatMat& central_basis() const { return central_basis_; }
  const IntMat& central_coords() const { return central_coords_; }

  AffineWeylElement realize(const OmegaElement& e) const;
  // Requires length(g) == 0; exact.
  OmegaElement decompose(const AffineWeylElement& g) const;
  // Image letter index of letter a under the table element (central
  // translations fix every affine root).
  int act_letter(int table_index, int letter) const { return letter_act_[table_index][letter]; }

  struct Generator {
    bool central = false;
    int ref = 0;  // table index, or central basis row
    AffineWeylElement g;
    std::string name;
  };
  // Torsion generators first, then central translation generators.
  const std::vector<Generator>& generators() const { return generators_; }
  int num_torsion_generators() const { return num_torsion_; }

  struct GenWord {
    std::vector<int> gens;  // indices into the torsion generators, repeats allowed
    IntVec central;         // table[i] = (prod of gens) * t_{-central}
  };
  const GenWord& gen_word(int table_index) const { return gen_words_[table_index]; }

private:
  const RootSystem* rs_;
  const Lattice* lat_;
  std::vector<AffineWeylElement> table_;
  RatMat central_basis_;          // rows, ambient
  IntMat central_coords_;         // same rows in Y-coordinates
  FiniteQuotient quotient_;
  std::vector<std::vector<int>> letter_act_;
  std::vector<Generator> generators_;
  int num_torsion_ = 0;
  std::vector<GenWord> gen_words_;

  IntVec central_coords_of(const RatVec& v) const;
};

}  // namespace trigdunkl
