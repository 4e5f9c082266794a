#include "trigdunkl/affine_weyl.hpp"

#include <algorithm>
#include <stdexcept>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

bool AffineWeylElement::is_identity() const {
  return w.is_identity() && is_zero(y);
}

AffineWeylElement AffineWeylElement::compose(const AffineWeylElement& o) const {
  // (w t_y)(w' t_{y'}) = ww' t_{w'^{-1}(y) + y'}
  AffineWeylElement out;
  out.w = w.compose(o.w);
  out.y = add(o.w.inverse().apply(y), o.y);
  return out;
}

AffineWeylElement AffineWeylElement::inverse() const {
  AffineWeylElement out;
  out.w = w.inverse();
  RatVec wy = w.apply(y);
  for (Rat& x : wy) x = -x;
  out.y = wy;
  return out;
}

RatVec AffineWeylElement::act_point(const RatVec& v) const {
  return w.apply(add(v, y));
}

std::vector<double> AffineWeylElement::act_point(const std::vector<double>& v) const {
  std::vector<double> s(v.size());
  for (size_t i = 0; i < v.size(); ++i) s[i] = v[i] + to_double(y[i]);
  return w.apply(s);
}

AffineWeylElement awe_identity(int dim) {
  return {SignedPerm::identity(dim), RatVec(dim, Rat(0))};
}

AffineWeylElement awe_translation(RatVec y) {
  int dim = static_cast<int>(y.size());
  return {SignedPerm::identity(dim), std::move(y)};
}

AffineWeylElement awe_from(SignedPerm w, RatVec y) {
  return {std::move(w), std::move(y)};
}

bool aroot_positive(const RootSystem& rs, const AffineRoot& a) {
  return a.m > 0 || (a.m == 0 && rs.is_positive(a.root));
}

int aroot_B(const RootSystem& rs, int root_index) {
  return rs.is_positive(root_index) ? 0 : 1;
}

Rat aroot_eval(const RootSystem& rs, const AffineRoot& a, const RatVec& v) {
  return rs.pair(a.root, v) + Rat(a.m);
}

double aroot_eval(const RootSystem& rs, const AffineRoot& a, const std::vector<double>& v) {
  double s = static_cast<double>(a.m);
  const RatVec& r = rs.root(a.root);
  for (size_t i = 0; i < v.size(); ++i) s += to_double(r[i]) * v[i];
  return s;
}

AffineRoot aroot_negate(const RootSystem& rs, const AffineRoot& a) {
  return {rs.negate(a.root), -a.m};
}

namespace {

long long integral(const Rat& r, const char* what) {
  if (r.denominator() != 1) throw std::logic_error(std::string("expected integer ") + what);
  return r.numerator();
}

}  // namespace

AffineRoot act_aroot(const RootSystem& rs, const AffineWeylElement& g, const AffineRoot& a) {
  AffineRoot out;
  out.root = rs.apply_index(g.w, a.root);
  out.m = a.m - integral(rs.pair(a.root, g.y), "root pairing a(y)");
  return out;
}

AffineWeylElement aroot_reflection(const RootSystem& rs, const AffineRoot& a) {
  RatVec y = rs.coroot(a.root);
  for (Rat& x : y) x *= Rat(a.m);
  return {rs.refl[a.root], y};
}

long long length(const RootSystem& rs, const AffineWeylElement& g) {
  long long l = 0;
  for (int i = 0; i < rs.nroots(); ++i) {
    long long c = integral(rs.pair(i, g.y), "root pairing a(y)") +
                  aroot_B(rs, rs.apply_index(g.w, i)) - aroot_B(rs, i);
    if (c > 0) l += c;
  }
  return l;
}

std::vector<AffineRoot> inversion_set(const RootSystem& rs, const AffineWeylElement& g) {
  std::vector<AffineRoot> inv;
  for (int i = 0; i < rs.nroots(); ++i) {
    long long lo = aroot_B(rs, i);
    long long hi = integral(rs.pair(i, g.y), "root pairing a(y)") +
                   aroot_B(rs, rs.apply_index(g.w, i));
    for (long long m = lo; m < hi; ++m) inv.push_back({i, m});
  }
  return inv;
}

bool left_descent(const RootSystem& rs, const AffineWeylElement& g, const AffineRoot& a) {
  return !aroot_positive(rs, act_aroot(rs, g.inverse(), a));
}

int LetterSet::index_of(const AffineRoot& a) const {
  for (int i = 0; i < size(); ++i)
    if (letters[i] == a) return i;
  return -1;
}

LetterSet affine_letters(const RootSystem& rs) {
  LetterSet ls;
  for (int p = 0; p < rs.rank; ++p) ls.letters.push_back({rs.simple[p], 0});
  ls.letters.push_back({rs.negate(rs.theta), 1});
  for (const AffineRoot& a : ls.letters) ls.refl.push_back(aroot_reflection(rs, a));
  return ls;
}

std::pair<std::vector<int>, AffineWeylElement> peel_word(const RootSystem& rs,
                                                         const LetterSet& ls,
                                                         const AffineWeylElement& g) {
  std::vector<int> word;
  AffineWeylElement cur = g;
  AffineWeylElement cur_inv = g.inverse();
  long long guard = length(rs, g) + 1;
  while (guard-- > 0) {
    int descent = -1;
    for (int i = 0; i < ls.size(); ++i) {
      if (!aroot_positive(rs, act_aroot(rs, cur_inv, ls.letters[i]))) {
        descent = i;
        break;
      }
    }
    if (descent < 0) break;
    word.push_back(descent);
    cur = ls.refl[descent].compose(cur);
    cur_inv = cur_inv.compose(ls.refl[descent]);
  }
  if (length(rs, cur) != 0)
    throw std::logic_error("descent peeling did not reach a length-zero element");
  return {std::move(word), std::move(cur)};
}

namespace {

// Is b in the integer column span of C?  Echelonize and back-substitute.
bool in_int_span(const IntMat& cols_as_rows, IntVec b) {
  if (cols_as_rows.empty()) return std::all_of(b.begin(), b.end(), [](long long x) { return x == 0; });
  int n = static_cast<int>(cols_as_rows[0].size());
  IntMat A(n, IntVec(cols_as_rows.size()));
  for (size_t c = 0; c < cols_as_rows.size(); ++c)
    for (int r = 0; r < n; ++r) A[r][c] = cols_as_rows[c][r];
  HermiteForm hf = column_hermite(A);
  for (int c = 0; c < hf.rank; ++c) {
    int r = 0;
    while (r < n && hf.H[r][c] == 0) ++r;
    if (r == n) break;
    long long p = hf.H[r][c];
    if (b[r] % p != 0) return false;
    long long q = b[r] / p;
    for (int t = 0; t < n; ++t) b[t] -= q * hf.H[t][c];
  }
  return std::all_of(b.begin(), b.end(), [](long long x) { return x == 0; });
}

}  // namespace

OmegaGroup::OmegaGroup(const RootSystem& rs, const Lattice& lat) : rs_(&rs), lat_(&lat) {
  // Central sublattice Y_c = Y cap R^perp: integer kernel of the simple
  // root pairings in Y-coordinates.
  IntMat pairings;
  for (int p = 0; p < rs.rank; ++p) pairings.push_back(lat.root_pairings[rs.simple[p]]);
  central_coords_ = kernel_basis(pairings);
  for (const IntVec& c : central_coords_) central_basis_.push_back(lat.from_coords(c));
  if (central_rank() > 1)
    throw LatticeError("central sublattice has rank > 1; unsupported lattice");

  // Finite torsion quotient Y / (Q^vee + Y_c).
  IntMat cols(lat.rank, IntVec(rs.rank + central_rank(), 0));
  for (int p = 0; p < rs.rank; ++p)
    for (int i = 0; i < lat.rank; ++i) cols[i][p] = lat.simple_coroot_coords[p][i];
  for (int c = 0; c < central_rank(); ++c)
    for (int i = 0; i < lat.rank; ++i) cols[i][rs.rank + c] = central_coords_[c][i];
  quotient_ = finite_quotient(cols);

  LetterSet ls = affine_letters(rs);
  for (const IntVec& rep : quotient_.reps) {
    AffineWeylElement g = awe_translation(lat.from_coords(rep));
    auto [word, rem] = peel_word(rs, ls, g);
    (void)word;
    table_.push_back(rem);
  }
  if (!table_[0].is_identity())
    throw std::logic_error("length-zero table does not start at the identity");

  letter_act_.resize(table_size());
  for (int i = 0; i < table_size(); ++i) {
    for (int a = 0; a < ls.size(); ++a) {
      int img = ls.index_of(act_aroot(rs, table_[i], ls.letters[a]));
      if (img < 0)
        throw std::logic_error("length-zero element does not permute the simple affine roots");
      letter_act_[i].push_back(img);
    }
  }

  auto idx_of = [this](const AffineWeylElement& g) {
    return quotient_.rep_index(lat_->to_coords(g.y));
  };
  auto mult_idx = [&](int i, int j) { return idx_of(table_[i].compose(table_[j])); };

  std::vector<int> order(table_size(), 1);
  for (int i = 1; i < table_size(); ++i) {
    int cur = i, ord = 1;
    while (cur != 0) {
      cur = mult_idx(cur, i);
      ++ord;
      if (ord > table_size() + 1) throw std::logic_error("torsion order exceeds table size");
    }
    order[i] = ord;
  }

  // Greedy minimal torsion generators: highest order first, closing the
  // generated subgroup after each pick.
  std::vector<bool> covered(table_size(), false);
  covered[0] = true;
  int num_covered = 1;
  while (num_covered < table_size()) {
    int best = -1;
    for (int i = 1; i < table_size(); ++i) {
      if (covered[i]) continue;
      if (best == -1 || order[i] > order[best]) best = i;
    }
    Generator gen;
    gen.central = false;
    gen.ref = best;
    gen.g = table_[best];
    gen.name = "pi" + std::to_string(num_torsion_ + 1);
    generators_.push_back(gen);
    ++num_torsion_;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < table_size(); ++i) {
        if (!covered[i]) continue;
        int j = mult_idx(i, best);
        if (!covered[j]) {
          covered[j] = true;
          ++num_covered;
          grew = true;
        }
      }
    }
  }

  // Express each table element through the generators (breadth-first), and
  // collect the central parts of the relations encountered; the relation
  // lattice decides which central translations are already generated.
  gen_words_.resize(table_size());
  std::vector<AffineWeylElement> reached(table_size(), awe_identity(rs.dim));
  std::vector<bool> seen(table_size(), false);
  seen[0] = true;
  std::vector<int> frontier{0};
  std::vector<std::pair<int, AffineWeylElement>> edges;  // (target idx, product element)
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int i : frontier) {
      for (int k = 0; k < num_torsion_; ++k) {
        AffineWeylElement prod = reached[i].compose(generators_[k].g);
        int j = idx_of(prod);
        if (!seen[j]) {
          seen[j] = true;
          reached[j] = prod;
          gen_words_[j].gens = gen_words_[i].gens;
          gen_words_[j].gens.push_back(k);
          next.push_back(j);
        } else {
          edges.emplace_back(j, prod);
        }
      }
    }
    frontier = std::move(next);
  }
  for (int i = 0; i < table_size(); ++i) {
    if (!seen[i]) throw std::logic_error("torsion generators do not reach the whole table");
    if (!(reached[i].w == table_[i].w))
      throw std::logic_error("generator product disagrees with table in the finite part");
    gen_words_[i].central = central_coords_of(sub(reached[i].y, table_[i].y));
  }

  IntMat relation_centrals;
  for (auto& [j, prod] : edges)
    relation_centrals.push_back(central_coords_of(sub(prod.y, reached[j].y)));
  for (int i = 0; i < table_size(); ++i) relation_centrals.push_back(gen_words_[i].central);

  for (int c = 0; c < central_rank(); ++c) {
    IntVec e(central_rank(), 0);
    e[c] = 1;
    if (in_int_span(relation_centrals, e)) continue;
    Generator gen;
    gen.central = true;
    gen.ref = c;
    gen.g = awe_translation(central_basis_[c]);
    gen.name = "tau" + std::to_string(c + 1);
    generators_.push_back(gen);
  }
}

IntVec OmegaGroup::central_coords_of(const RatVec& v) const {
  if (central_rank() == 0) {
    if (!is_zero(v)) throw std::logic_error("expected zero central part");
    return {};
  }
  RatMat at(rs_->dim, RatVec(central_rank(), Rat(0)));
  for (int c = 0; c < central_rank(); ++c)
    for (int t = 0; t < rs_->dim; ++t) at[t][c] = central_basis_[c][t];
  LinearSolution sol = solve_linear(at, v);
  if (!sol.consistent || !is_integral(sol.particular))
    throw std::logic_error("vector is not in the central sublattice");
  IntVec out(central_rank());
  for (int c = 0; c < central_rank(); ++c) out[c] = sol.particular[c].numerator();
  return out;
}

AffineWeylElement OmegaGroup::realize(const OmegaElement& e) const {
  AffineWeylElement g = table_[e.index];
  if (central_rank() == 0) return g;
  RatVec c(rs_->dim, Rat(0));
  for (int j = 0; j < central_rank(); ++j)
    c = add(c, scale(Rat(e.central[j]), central_basis_[j]));
  return g.compose(awe_translation(c));
}

OmegaElement OmegaGroup::decompose(const AffineWeylElement& g) const {
  if (length(*rs_, g) != 0)
    throw std::logic_error("decompose requires a length-zero element");
  OmegaElement e;
  e.index = quotient_.rep_index(lat_->to_coords(g.y));
  if (!(g.w == table_[e.index].w))
    throw std::logic_error("length-zero element disagrees with its table representative");
  e.central = central_coords_of(sub(g.y, table_[e.index].y));
  return e;
}

}  // namespace trigdunkl
