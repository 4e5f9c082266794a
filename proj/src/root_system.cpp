#include "trigdunkl/root_system.hpp"

#include <algorithm>
#include <stdexcept>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

RootKind parse_root_kind(const std::string& s) {
  if (s == "A" || s == "a") return RootKind::A;
  if (s == "B" || s == "b") return RootKind::B;
  if (s == "C" || s == "c") return RootKind::C;
  if (s == "D" || s == "d") return RootKind::D;
  throw ConfigError("unknown root system kind '" + s + "' (expected A, B, C, or D)");
}

char root_kind_char(RootKind k) {
  switch (k) {
    case RootKind::A: return 'A';
    case RootKind::B: return 'B';
    case RootKind::C: return 'C';
    case RootKind::D: return 'D';
  }
  return '?';
}

namespace {

RatVec eps(int dim, int i, long long c) {
  RatVec v(dim, Rat(0));
  v[i] = Rat(c);
  return v;
}

RatVec eps2(int dim, int i, long long ci, int j, long long cj) {
  RatVec v(dim, Rat(0));
  v[i] = Rat(ci);
  v[j] = Rat(cj);
  return v;
}

// s_a(e_t) = e_t - <e_t, a^vee> a must land on a signed basis vector for
// the epsilon realizations used here.
SignedPerm reflection_perm(const RatVec& a, const RatVec& av, int dim) {
  SignedPerm w = SignedPerm::identity(dim);
  for (int t = 0; t < dim; ++t) {
    RatVec img(dim, Rat(0));
    img[t] = Rat(1);
    Rat c = av[t];
    for (int s = 0; s < dim; ++s) img[s] -= c * a[s];
    int target = -1;
    int sign = 0;
    for (int s = 0; s < dim; ++s) {
      if (img[s] == Rat(0)) continue;
      if (target != -1) throw std::logic_error("reflection image not a signed basis vector");
      if (img[s] == Rat(1)) { target = s; sign = 1; }
      else if (img[s] == Rat(-1)) { target = s; sign = -1; }
      else throw std::logic_error("reflection image has non-unit entry");
    }
    if (target == -1) throw std::logic_error("reflection image vanished");
    w.perm[t] = target;
    w.sign[t] = sign;
  }
  return w;
}

}  // namespace

int RootSystem::index_of(const RatVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::apply_index(const SignedPerm& w, int i) const {
  int j = index_of(w.apply(roots[i]));
  if (j < 0) throw std::logic_error("signed permutation does not preserve the root set");
  return j;
}

RootSystem build_root_system(RootKind kind, int rank) {
  if (rank < 1) throw ConfigError("rank must be at least 1");
  if (kind == RootKind::D && rank < 3)
    throw ConfigError("type D requires rank >= 3 (D_2 is not irreducible)");

  RootSystem rs;
  rs.kind = kind;
  rs.rank = rank;
  rs.dim = (kind == RootKind::A) ? rank + 1 : rank;
  const int d = rs.dim;

  std::vector<RatVec> pos;
  switch (kind) {
    case RootKind::A:
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) pos.push_back(eps2(d, i, 1, j, -1));
      break;
    case RootKind::B:
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) pos.push_back(eps2(d, i, 1, j, -1));
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) pos.push_back(eps2(d, i, 1, j, 1));
      for (int i = 0; i < d; ++i) pos.push_back(eps(d, i, 1));
      break;
    case RootKind::C:
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) pos.push_back(eps2(d, i, 1, j, -1));
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) pos.push_back(eps2(d, i, 1, j, 1));
      for (int i = 0; i < d; ++i) pos.push_back(eps(d, i, 2));
      break;
    case RootKind::D:
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) pos.push_back(eps2(d, i, 1, j, -1));
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) pos.push_back(eps2(d, i, 1, j, 1));
      break;
  }

  rs.npos = static_cast<int>(pos.size());
  rs.roots = pos;
  for (const RatVec& r : pos) {
    RatVec neg(r);
    for (Rat& x : neg) x = -x;
    rs.roots.push_back(neg);
  }

  rs.coroots.reserve(rs.roots.size());
  for (const RatVec& r : rs.roots) {
    Rat norm2 = dot(r, r);
    RatVec cv(r);
    for (Rat& x : cv) x = Rat(2) * x / norm2;
    rs.coroots.push_back(cv);
  }

  for (int i = 0; i < rs.nroots(); ++i) rs.index_[rs.roots[i]] = i;

  auto find = [&rs](const RatVec& v) {
    int i = rs.index_of(v);
    if (i < 0) throw std::logic_error("expected root not present");
    return i;
  };

  // Simple roots e_i - e_{i+1} plus the family-specific last node.
  for (int i = 0; i + 1 < d; ++i) rs.simple.push_back(find(eps2(d, i, 1, i + 1, -1)));
  switch (kind) {
    case RootKind::A:
      break;  // the chain is already complete
    case RootKind::B:
      rs.simple.push_back(find(eps(d, d - 1, 1)));
      break;
    case RootKind::C:
      rs.simple.push_back(find(eps(d, d - 1, 2)));
      break;
    case RootKind::D:
      rs.simple.push_back(find(eps2(d, d - 2, 1, d - 1, 1)));
      break;
  }
  if (static_cast<int>(rs.simple.size()) != rank)
    throw std::logic_error("simple root count mismatch");

  switch (kind) {
    case RootKind::A: rs.theta = find(eps2(d, 0, 1, d - 1, -1)); break;
    case RootKind::B: rs.theta = (rank >= 2) ? find(eps2(d, 0, 1, 1, 1)) : find(eps(d, 0, 1)); break;
    case RootKind::C: rs.theta = find(eps(d, 0, 2)); break;
    case RootKind::D: rs.theta = find(eps2(d, 0, 1, 1, 1)); break;
  }

  rs.refl.reserve(rs.nroots());
  for (int i = 0; i < rs.nroots(); ++i)
    rs.refl.push_back(reflection_perm(rs.roots[i], rs.coroots[i], d));

  // W-orbits by closure under the simple reflections, ids in order of the
  // lowest root index they contain.
  rs.worbit.assign(rs.nroots(), -1);
  for (int start = 0; start < rs.nroots(); ++start) {
    if (rs.worbit[start] != -1) continue;
    int id = rs.num_worbits++;
    rs.orbit_rep.push_back(start);
    std::vector<int> stack{start};
    rs.worbit[start] = id;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int s : rs.simple) {
        int img = rs.apply_index(rs.refl[s], cur);
        if (rs.worbit[img] == -1) {
          rs.worbit[img] = id;
          stack.push_back(img);
        }
      }
    }
  }

  return rs;
}

}  // namespace trigdunkl
