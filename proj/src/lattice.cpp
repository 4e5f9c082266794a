#include "trigdunkl/lattice.hpp"

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

LatticeMode parse_lattice_mode(const std::string& s) {
  if (s == "coroot_lattice") return LatticeMode::CorootLattice;
  if (s == "standard_Zn") return LatticeMode::StandardZn;
  if (s == "custom") return LatticeMode::Custom;
  throw ConfigError("unknown lattice mode '" + s +
                    "' (expected coroot_lattice, standard_Zn, or custom)");
}

std::string lattice_mode_name(LatticeMode m) {
  switch (m) {
    case LatticeMode::CorootLattice: return "coroot_lattice";
    case LatticeMode::StandardZn: return "standard_Zn";
    case LatticeMode::Custom: return "custom";
  }
  return "?";
}

namespace {

// Solve basis^T c = y exactly; empty when y is outside the row span or the
// coordinates are not unique (rows are checked independent at build time).
std::optional<RatVec> coords_of(const RatMat& basis, const RatVec& y) {
  int r = static_cast<int>(basis.size());
  int d = static_cast<int>(y.size());
  RatMat at(d, RatVec(r, Rat(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < d; ++j) at[j][i] = basis[i][j];
  LinearSolution sol = solve_linear(at, y);
  if (!sol.consistent) return std::nullopt;
  return sol.particular;
}

}  // namespace

bool Lattice::contains(const RatVec& y) const {
  auto c = coords_of(basis, y);
  if (!c) return false;
  return is_integral(*c);
}

IntVec Lattice::to_coords(const RatVec& y) const {
  auto c = coords_of(basis, y);
  if (!c || !is_integral(*c))
    throw LatticeError("vector is not in the translation lattice");
  IntVec out(rank);
  for (int j = 0; j < rank; ++j) out[j] = c->at(j).numerator();
  return out;
}

RatVec Lattice::from_coords(const IntVec& c) const {
  RatVec y(dim, Rat(0));
  for (int j = 0; j < rank; ++j)
    for (int t = 0; t < dim; ++t) y[t] += Rat(c[j]) * basis[j][t];
  return y;
}

Lattice build_lattice(const RootSystem& rs, LatticeMode mode,
                      const std::optional<RatMat>& custom_basis) {
  Lattice lat;
  lat.mode = mode;
  lat.dim = rs.dim;

  switch (mode) {
    case LatticeMode::CorootLattice:
      for (int s : rs.simple) lat.basis.push_back(rs.coroot(s));
      break;
    case LatticeMode::StandardZn: {
      if (rs.kind != RootKind::A)
        throw LatticeError("lattice mode standard_Zn is only available for type A");
      for (int i = 0; i < rs.dim; ++i) {
        RatVec e(rs.dim, Rat(0));
        e[i] = Rat(1);
        lat.basis.push_back(e);
      }
      break;
    }
    case LatticeMode::Custom: {
      if (!custom_basis) throw ConfigError("lattice mode custom requires a basis");
      lat.basis = *custom_basis;
      for (const RatVec& row : lat.basis)
        if (static_cast<int>(row.size()) != rs.dim)
          throw LatticeError("custom basis row dimension does not match the ambient space");
      break;
    }
  }
  lat.rank = static_cast<int>(lat.basis.size());
  if (lat.rank == 0) throw LatticeError("lattice basis is empty");
  if (rank(lat.basis) != lat.rank)
    throw LatticeError("lattice basis rows are linearly dependent");

  // a(Y) <= Z for every root.
  RatMat pair_rows;
  for (int i = 0; i < rs.nroots(); ++i) {
    RatVec row(lat.rank);
    for (int j = 0; j < lat.rank; ++j) {
      Rat v = dot(rs.root(i), lat.basis[j]);
      if (v.denominator() != 1)
        throw LatticeError("root pairing a(Y) is not integral: basis vector " +
                           std::to_string(j) + " pairs fractionally with a root");
      row[j] = v;
    }
    pair_rows.push_back(row);
  }
  lat.root_pairings = integer_rows(pair_rows);

  // Q^vee <= Y, checked on the simple coroots.
  for (int p = 0; p < rs.rank; ++p) {
    auto c = coords_of(lat.basis, rs.coroot(rs.simple[p]));
    if (!c || !is_integral(*c))
      throw LatticeError("coroot lattice is not contained in Y: simple coroot " +
                         std::to_string(p) + " has no integral coordinates");
    IntVec ic(lat.rank);
    for (int j = 0; j < lat.rank; ++j) ic[j] = c->at(j).numerator();
    lat.simple_coroot_coords.push_back(ic);
  }

  return lat;
}

}  // namespace trigdunkl
