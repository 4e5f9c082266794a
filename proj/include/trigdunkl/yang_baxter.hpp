#pragma once

#include "trigdunkl/group_algebra.hpp"

namespace trigdunkl {

// Transposition (i j) on coordinates, as a group element with no translation.
AffineWeylElement transposition(int dim, int i, int j);

// Exchange operator Y_{i,j}(u) = (u + k s_{i,j}) / (u - k) in C[S_dim].
GroupAlgebraElement yb_operator(int dim, int i, int j, cd u, cd k);

}  // namespace trigdunkl
