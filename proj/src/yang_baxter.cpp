#include "trigdunkl/yang_baxter.hpp"

#include <cmath>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

AffineWeylElement transposition(int dim, int i, int j) {
  SignedPerm w = SignedPerm::identity(dim);
  w.perm[i] = j;
  w.perm[j] = i;
  return awe_from(w, RatVec(dim, Rat(0)));
}

GroupAlgebraElement yb_operator(int dim, int i, int j, cd u, cd k) {
  if (std::abs(u - k) <= 1e-14 * std::max(1.0, std::abs(k)))
    throw GenericityError("exchange operator pole: u - k is within margin of zero");
  GroupAlgebraElement out;
  out.add_term(awe_identity(dim), u / (u - k));
  out.add_term(transposition(dim, i, j), k / (u - k));
  return out;
}

}  // namespace trigdunkl
