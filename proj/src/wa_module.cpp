#include "trigdunkl/wa_module.hpp"

#include <cmath>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

Mat WaModule::act_word(const std::vector<int>& word) const {
  Mat out = Mat::Identity(dim, dim);
  for (int a : word) out = out * simple_action[a];
  return out;
}

Mat WaModule::act_translation(const IntVec& ycoords) const {
  Mat out = Mat::Identity(dim, dim);
  for (size_t j = 0; j < ycoords.size(); ++j) {
    const Mat& step = ycoords[j] >= 0 ? trans_action[j] : trans_action_inv[j];
    for (long long c = std::llabs(ycoords[j]); c > 0; --c) out = out * step;
  }
  return out;
}

Mat WaModule::act_omega(const OmegaElement& e) const {
  Mat out = table_action[e.index];
  if (!e.central.empty()) {
    const IntMat& cc = st->omega->central_coords();
    IntVec y(st->lat.rank, 0);
    for (size_t j = 0; j < e.central.size(); ++j)
      for (int i = 0; i < st->lat.rank; ++i) y[i] += e.central[j] * cc[j][i];
    out = out * act_translation(y);
  }
  return out;
}

Mat WaModule::act(const AffineWeylElement& g) const {
  ReducedWord rw = st->reduced_word(g);
  return act_word(rw.word) * act_omega(rw.omega);
}

void WaModule::finalize() {
  trans_action_inv.clear();
  for (const Mat& m : trans_action) trans_action_inv.push_back(m.inverse());
  table_action.assign(st->omega->table_size(), Mat());
  const IntMat& cc = st->omega->central_coords();
  for (int i = 0; i < st->omega->table_size(); ++i) {
    const OmegaGroup::GenWord& gw = st->omega->gen_word(i);
    Mat out = Mat::Identity(dim, dim);
    for (int k : gw.gens) out = out * omega_action[k];
    if (!gw.central.empty()) {
      IntVec y(st->lat.rank, 0);
      for (size_t j = 0; j < gw.central.size(); ++j)
        for (int t = 0; t < st->lat.rank; ++t) y[t] -= gw.central[j] * cc[j][t];
      out = out * act_translation(y);
    }
    table_action[i] = out;
  }
}

WaModule trivial_module(const Setting& st) {
  WaModule m;
  m.st = &st;
  m.dim = 1;
  m.name = "trivial";
  m.unitary = true;
  m.simple_action.assign(st.letters.size(), Mat::Identity(1, 1));
  m.omega_action.assign(st.omega->num_torsion_generators(), Mat::Identity(1, 1));
  m.trans_action.assign(st.lat.rank, Mat::Identity(1, 1));
  m.finalize();
  return m;
}

namespace {

cd pair_t(const CVec& t, const RatVec& v) {
  cd s = 0.0;
  for (size_t i = 0; i < v.size(); ++i) s += t[i] * to_double(v[i]);
  return s;
}

// rho(w t_y) v_{w'} = exp(t(w'^{-1} y)) v_{w w'} on the basis indexed by W.
Mat ps_matrix(const Setting& st, const CVec& t, const AffineWeylElement& g) {
  int nw = static_cast<int>(st.W.size());
  Mat m = Mat::Zero(nw, nw);
  int wi = st.w_index(g.w);
  for (int j = 0; j < nw; ++j) {
    RatVec winv_y = st.W[st.w_inv[j]].apply(g.y);
    m(st.w_mul[wi][j], j) = std::exp(pair_t(t, winv_y));
  }
  return m;
}

}  // namespace

WaModule principal_series_module(const Setting& st, const CVec& t) {
  if (static_cast<int>(t.size()) != st.rs.dim)
    throw ConfigError("principal series parameter dimension mismatch");
  WaModule m;
  m.st = &st;
  m.dim = static_cast<int>(st.W.size());
  m.name = "principal_series";
  double re = 0.0;
  for (const cd& x : t) re = std::max(re, std::abs(x.real()));
  m.unitary = re < 1e-12;
  for (int a = 0; a < st.letters.size(); ++a)
    m.simple_action.push_back(ps_matrix(st, t, st.letters.refl[a]));
  for (int k = 0; k < st.omega->num_torsion_generators(); ++k)
    m.omega_action.push_back(ps_matrix(st, t, st.omega->generators()[k].g));
  for (int j = 0; j < st.lat.rank; ++j)
    m.trans_action.push_back(ps_matrix(st, t, awe_translation(st.lat.basis[j])));
  m.finalize();
  return m;
}

WaModule spin_module(const Setting& st, int local_dim) {
  if (st.rs.kind != RootKind::A || st.lat.mode != LatticeMode::StandardZn)
    throw ConfigError("spin module requires type A with the standard lattice");
  if (local_dim < 1) throw ConfigError("spin module local dimension must be positive");
  int n = st.rs.dim;
  double dims = std::pow(static_cast<double>(local_dim), n);
  if (dims > 4096.0) throw ConfigError("spin module dimension exceeds 4096");
  int dim = static_cast<int>(dims + 0.5);

  WaModule m;
  m.st = &st;
  m.dim = dim;
  m.name = "spin";
  m.unitary = true;

  // Basis: occupation tuples (i_1, ..., i_n) in mixed radix, site 1 fastest.
  auto digit = [&](int state, int site) {
    for (int s = 0; s < site; ++s) state /= local_dim;
    return state % local_dim;
  };
  auto place_perm = [&](const SignedPerm& w) {
    SignedPerm winv = w.inverse();
    Mat out = Mat::Zero(dim, dim);
    for (int b = 0; b < dim; ++b) {
      int img = 0, base = 1;
      for (int site = 0; site < n; ++site) {
        // the factor at position `site` of the image came from w^{-1}(site)
        img += digit(b, winv.perm[site]) * base;
        base *= local_dim;
      }
      out(img, b) = 1.0;
    }
    return out;
  };
  for (int a = 0; a < st.letters.size(); ++a)
    m.simple_action.push_back(place_perm(st.letters.refl[a].w));
  for (int k = 0; k < st.omega->num_torsion_generators(); ++k)
    m.omega_action.push_back(place_perm(st.omega->generators()[k].g.w));
  m.trans_action.assign(st.lat.rank, Mat::Identity(dim, dim));
  m.finalize();
  return m;
}

WaModule contragredient_module(const WaModule& base) {
  WaModule m;
  m.st = base.st;
  m.dim = base.dim;
  m.name = "contragredient(" + base.name + ")";
  m.unitary = base.unitary;
  auto ct = [](const Mat& a) { return Mat(a.inverse().transpose()); };
  for (const Mat& a : base.simple_action) m.simple_action.push_back(ct(a));
  for (const Mat& a : base.omega_action) m.omega_action.push_back(ct(a));
  for (const Mat& a : base.trans_action) m.trans_action.push_back(ct(a));
  m.finalize();
  return m;
}

RelationReport verify_relations(const WaModule& m, double tol) {
  const Setting& st = *m.st;
  RelationReport rep;
  auto check = [&](const Mat& a, const Mat& b, const std::string& what) {
    double r = (a - b).cwiseAbs().maxCoeff();
    rep.max_residual = std::max(rep.max_residual, r);
    if (r > tol) {
      rep.pass = false;
      rep.failures.push_back(what + " (residual " + std::to_string(r) + ")");
    }
  };
  Mat id = Mat::Identity(m.dim, m.dim);
  int nl = st.letters.size();
  for (int a = 0; a < nl; ++a)
    check(m.simple_action[a] * m.simple_action[a], id,
          "letter " + std::to_string(a) + " is not an involution");
  for (int a = 0; a < nl; ++a) {
    for (int b = a + 1; b < nl; ++b) {
      int order = st.braid_order[a][b];
      if (order == 0) continue;
      Mat prod = m.simple_action[a] * m.simple_action[b];
      Mat pw = id;
      for (int t = 0; t < order; ++t) pw = pw * prod;
      check(pw, id, "braid relation (" + std::to_string(a) + "," + std::to_string(b) +
                        ") of order " + std::to_string(order) + " fails");
    }
  }
  for (int k = 0; k < st.omega->num_torsion_generators(); ++k) {
    const auto& gen = st.omega->generators()[k];
    Mat om = m.omega_action[k];
    for (int a = 0; a < nl; ++a) {
      int img = st.omega->act_letter(gen.ref, a);
      check(om * m.simple_action[a], m.simple_action[img] * om,
            "length-zero generator does not permute letter " + std::to_string(a));
    }
  }
  for (size_t k = st.omega->num_torsion_generators(); k < st.omega->generators().size(); ++k) {
    const auto& gen = st.omega->generators()[k];
    Mat om = m.act_translation(st.lat.to_coords(gen.g.y));
    for (int a = 0; a < nl; ++a)
      check(om * m.simple_action[a], m.simple_action[a] * om,
            "central translation does not commute with letter " + std::to_string(a));
  }
  for (int i = 0; i < st.lat.rank; ++i) {
    check(m.trans_action[i] * m.trans_action_inv[i], id,
          "translation " + std::to_string(i) + " inverse fails");
    for (int j = i + 1; j < st.lat.rank; ++j)
      check(m.trans_action[i] * m.trans_action[j], m.trans_action[j] * m.trans_action[i],
            "translations " + std::to_string(i) + "," + std::to_string(j) + " do not commute");
  }
  for (int a = 0; a < nl; ++a) {
    const SignedPerm& da = st.rs.refl[st.letters.letters[a].root];
    for (int j = 0; j < st.lat.rank; ++j) {
      Mat lhs = m.simple_action[a] * m.trans_action[j] * m.simple_action[a];
      // s_a t_y s_a^{-1} = t_{s_{Da}(y)}; the affine offset of a drops out.
      Mat rhs = m.act_translation(st.lat.to_coords(da.apply(st.lat.basis[j])));
      check(lhs, rhs, "letter " + std::to_string(a) + " conjugation of translation " +
                          std::to_string(j) + " fails");
    }
  }
  if (m.unitary) {
    auto uni = [&](const Mat& a, const std::string& what) {
      check(a.adjoint() * a, id, what + " is not unitary");
    };
    for (int a = 0; a < nl; ++a) uni(m.simple_action[a], "letter " + std::to_string(a));
    for (size_t k = 0; k < m.omega_action.size(); ++k)
      uni(m.omega_action[k], "length-zero generator " + std::to_string(k));
    for (int j = 0; j < st.lat.rank; ++j)
      uni(m.trans_action[j], "translation " + std::to_string(j));
  }
  return rep;
}

}  // namespace trigdunkl
