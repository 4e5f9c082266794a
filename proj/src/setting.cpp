#include "trigdunkl/setting.hpp"

#include <deque>
#include <stdexcept>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

int Setting::w_index(const SignedPerm& w) const {
  auto it = w_lookup_.find(w);
  if (it == w_lookup_.end()) throw std::logic_error("signed permutation is not in W");
  return it->second;
}

int Setting::letter_mul(int p, int i) const {
  return w_index(rs.refl[rs.simple[p]].compose(W[i]));
}

ReducedWord Setting::reduced_word(const AffineWeylElement& g) const {
  auto [word, rem] = peel_word(rs, letters, g);
  return {std::move(word), omega->decompose(rem)};
}

AffineWeylElement Setting::realize(const ReducedWord& rw) const {
  AffineWeylElement g = awe_identity(rs.dim);
  for (int a : rw.word) g = g.compose(letters.refl[a]);
  return g.compose(omega->realize(rw.omega));
}

std::unique_ptr<Setting> build_setting(RootKind kind, int rank, LatticeMode mode,
                                       const std::optional<RatMat>& custom_basis) {
  auto st = std::make_unique<Setting>();
  st->rs = build_root_system(kind, rank);
  const RootSystem& rs = st->rs;
  st->lat = build_lattice(rs, mode, custom_basis);
  st->orbits = classify_orbits(rs, st->lat);
  st->letters = affine_letters(rs);
  st->omega = std::make_unique<OmegaGroup>(rs, st->lat);

  // Finite Weyl group, breadth-first over right multiplication so the
  // identity sits at index 0.
  st->W.push_back(SignedPerm::identity(rs.dim));
  st->w_lookup_[st->W[0]] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int p = 0; p < rs.rank; ++p) {
      SignedPerm next = st->W[i].compose(rs.refl[rs.simple[p]]);
      if (st->w_lookup_.count(next)) continue;
      int j = static_cast<int>(st->W.size());
      st->W.push_back(next);
      st->w_lookup_[next] = j;
      queue.push_back(j);
    }
  }
  int nw = static_cast<int>(st->W.size());
  st->w_mul.assign(nw, std::vector<int>(nw));
  st->w_inv.assign(nw, 0);
  st->root_act.assign(nw, std::vector<int>(rs.nroots()));
  for (int i = 0; i < nw; ++i) {
    st->w_inv[i] = st->w_index(st->W[i].inverse());
    for (int r = 0; r < rs.nroots(); ++r) st->root_act[i][r] = rs.apply_index(st->W[i], r);
    for (int j = 0; j < nw; ++j) st->w_mul[i][j] = st->w_index(st->W[i].compose(st->W[j]));
  }
  for (int i = 0; i < nw; ++i) {
    int ninv = 0;
    for (int r = 0; r < rs.npos; ++r)
      if (!rs.is_positive(st->root_act[i][r])) ++ninv;
    if (ninv == rs.npos) st->w0 = i;
  }

  // R^perp and the alcove data.
  RatMat root_rows;
  for (int p = 0; p < rank; ++p) root_rows.push_back(rs.root(rs.simple[p]));
  {
    LinearSolution sol = solve_linear(root_rows, RatVec(rank, Rat(0)));
    st->central_dirs = sol.nullspace;
  }
  for (int p = 0; p < rank; ++p) {
    RatMat rows;
    RatVec rhs;
    for (int q = 0; q < rank; ++q) {
      rows.push_back(rs.root(rs.simple[q]));
      rhs.push_back(q == p ? Rat(1) : Rat(0));
    }
    for (const RatVec& c : st->central_dirs) {
      rows.push_back(c);
      rhs.push_back(Rat(0));
    }
    LinearSolution sol = solve_linear(rows, rhs);
    if (!sol.consistent || !sol.nullspace.empty())
      throw std::logic_error("fundamental coweight system is not uniquely solvable");
    st->fund_coweights.push_back(sol.particular);
  }
  {
    // theta in the simple-root basis.
    RatMat at(rs.dim, RatVec(rank, Rat(0)));
    for (int p = 0; p < rank; ++p)
      for (int t = 0; t < rs.dim; ++t) at[t][p] = rs.root(rs.simple[p])[t];
    LinearSolution sol = solve_linear(at, rs.root(rs.theta));
    if (!sol.consistent) throw std::logic_error("theta is not in the root lattice span");
    st->theta_coeffs = sol.particular;
  }
  st->alcove_vertices.push_back(RatVec(rs.dim, Rat(0)));
  for (int p = 0; p < rank; ++p) {
    if (st->theta_coeffs[p] <= Rat(0)) throw std::logic_error("theta coefficient not positive");
    st->alcove_vertices.push_back(scale(Rat(1) / st->theta_coeffs[p], st->fund_coweights[p]));
  }
  RatVec center(rs.dim, Rat(0));
  for (const RatVec& v : st->alcove_vertices) center = add(center, v);
  st->alcove_center = scale(Rat(1, rank + 1), center);

  // Braid orders from the products of pairings of the letter gradients.
  int nl = st->letters.size();
  st->braid_order.assign(nl, std::vector<int>(nl, 0));
  for (int i = 0; i < nl; ++i) {
    for (int j = 0; j < nl; ++j) {
      if (i == j) continue;
      Rat nij = rs.pair(st->letters.letters[i].root, rs.coroot(st->letters.letters[j].root)) *
                rs.pair(st->letters.letters[j].root, rs.coroot(st->letters.letters[i].root));
      if (nij.denominator() != 1) throw std::logic_error("non-integral Cartan product");
      switch (nij.numerator()) {
        case 0: st->braid_order[i][j] = 2; break;
        case 1: st->braid_order[i][j] = 3; break;
        case 2: st->braid_order[i][j] = 4; break;
        case 3: st->braid_order[i][j] = 6; break;
        default: st->braid_order[i][j] = 0; break;  // no relation
      }
    }
  }

  return st;
}

}  // namespace trigdunkl
