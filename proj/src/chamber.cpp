#include "trigdunkl/chamber.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

namespace {

std::vector<double> letter_values(const Setting& st, const std::vector<double>& v) {
  std::vector<double> vals(st.letters.size());
  for (int i = 0; i < st.letters.size(); ++i)
    vals[i] = aroot_eval(st.rs, st.letters.letters[i], v);
  return vals;
}

constexpr int kMaxWalk = 200000;

}  // namespace

ChamberLocation locate_chamber(const Setting& st, const std::vector<double>& v) {
  AffineWeylElement u = awe_identity(st.rs.dim);
  std::vector<double> vp = v;
  for (int iter = 0; iter < kMaxWalk; ++iter) {
    std::vector<double> vals = letter_values(st, vp);
    int neg = -1;
    for (int i = 0; i < st.letters.size(); ++i) {
      if (std::abs(vals[i]) <= kWallMargin) {
        AffineRoot wall = act_aroot(st.rs, u, st.letters.letters[i]);
        std::vector<double> grad(st.rs.dim);
        for (int t = 0; t < st.rs.dim; ++t) grad[t] = to_double(st.rs.root(wall.root)[t]);
        throw OnWallError("point is within margin of an affine wall", grad, wall.m);
      }
      if (neg < 0 && vals[i] < 0.0) neg = i;
    }
    if (neg < 0) {
      double dist = *std::min_element(vals.begin(), vals.end());
      return {u, vp, dist};
    }
    u = u.compose(st.letters.refl[neg]);
    vp = st.letters.refl[neg].act_point(vp);
  }
  throw GeometryError("chamber walk did not terminate");
}

std::vector<AffineWeylElement> locate_chambers_closed(const Setting& st,
                                                      const std::vector<double>& v,
                                                      double margin) {
  // Walk to one chamber whose closure contains v (near-wall values count as
  // inside), then flood across the walls that pass within margin of v.
  AffineWeylElement u = awe_identity(st.rs.dim);
  std::vector<double> vp = v;
  for (int iter = 0;; ++iter) {
    if (iter >= kMaxWalk) throw GeometryError("chamber walk did not terminate");
    std::vector<double> vals = letter_values(st, vp);
    int neg = -1;
    for (int i = 0; i < st.letters.size(); ++i)
      if (vals[i] < -margin) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    u = u.compose(st.letters.refl[neg]);
    vp = st.letters.refl[neg].act_point(vp);
  }
  std::set<AffineWeylElement> seen{u};
  std::vector<AffineWeylElement> queue{u}, out;
  while (!queue.empty()) {
    AffineWeylElement cur = queue.back();
    queue.pop_back();
    out.push_back(cur);
    if (out.size() > 64) throw GeometryError("too many chambers meet at the sample point");
    std::vector<double> cv = cur.inverse().act_point(v);
    std::vector<double> vals = letter_values(st, cv);
    for (int i = 0; i < st.letters.size(); ++i) {
      if (std::abs(vals[i]) > margin) continue;
      AffineWeylElement nb = cur.compose(st.letters.refl[i]);
      if (seen.insert(nb).second) queue.push_back(nb);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<double>> wall_samples(const Setting& st, int letter, int count,
                                              uint64_t seed) {
  // Facet vertices: the alcove vertices not opposite the wall.  Vertex 0 is
  // the origin (on every finite wall); vertex p+1 = omega_p^vee / c_p lies
  // on every wall except letter p, and on the affine wall.
  std::vector<std::vector<double>> verts;
  auto push_vert = [&](const RatVec& rv) {
    std::vector<double> v(st.rs.dim);
    for (int t = 0; t < st.rs.dim; ++t) v[t] = to_double(rv[t]);
    verts.push_back(v);
  };
  if (letter < st.rs.rank) {
    push_vert(st.alcove_vertices[0]);
    for (int p = 0; p < st.rs.rank; ++p)
      if (p != letter) push_vert(st.alcove_vertices[p + 1]);
  } else {
    for (int p = 0; p < st.rs.rank; ++p) push_vert(st.alcove_vertices[p + 1]);
  }

  Rng rng(seed * 0x100000001b3ull + static_cast<uint64_t>(letter) + 0x9e37ull);
  const double floor_w = 1e-3;
  int nv = static_cast<int>(verts.size());
  std::vector<std::vector<double>> out;
  for (int s = 0; s < count; ++s) {
    std::vector<double> g(nv);
    double tot = 0.0;
    for (double& x : g) {
      x = rng.uniform();
      tot += x;
    }
    std::vector<double> pt(st.rs.dim, 0.0);
    for (int q = 0; q < nv; ++q) {
      double w = floor_w + (1.0 - nv * floor_w) * g[q] / tot;
      for (int t = 0; t < st.rs.dim; ++t) pt[t] += w * verts[q][t];
    }
    for (const RatVec& dir : st.central_dirs) {
      double xi = rng.uniform(-0.4, 0.4);
      for (int t = 0; t < st.rs.dim; ++t) pt[t] += xi * to_double(dir[t]);
    }
    out.push_back(pt);
  }
  return out;
}

}  // namespace trigdunkl
