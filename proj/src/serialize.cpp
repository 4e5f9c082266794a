#include "trigdunkl/serialize.hpp"

#include <cstdio>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json complex_json(cd z) { return json::array({z.real(), z.imag()}); }

cd complex_from_json(const json& j) {
  if (j.is_number()) return cd(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cd(j[0].get<double>(), j[1].get<double>());
  if (j.is_object() && (j.contains("re") || j.contains("im")))
    return cd(j.value("re", 0.0), j.value("im", 0.0));
  throw ConfigError("expected a complex number (number, [re, im], or {\"re\", \"im\"}): " +
                    j.dump());
}

json element_to_json(const Setting& st, const AffineWeylElement& g) {
  ReducedWord rw = st.reduced_word(g);
  json j;
  j["word"] = rw.word;
  j["omega"] = rw.omega.index;
  bool nonzero = false;
  for (long long c : rw.omega.central)
    if (c != 0) nonzero = true;
  if (nonzero) j["central"] = rw.omega.central;
  return j;
}

AffineWeylElement element_from_json(const Setting& st, const json& j) {
  if (!j.is_object()) throw ConfigError("group element must be a JSON object: " + j.dump());
  if (j.contains("perm")) {
    int dim = st.rs.dim;
    auto perm = j.at("perm").get<std::vector<int>>();
    auto signs = j.value("signs", std::vector<int>(dim, 1));
    if (static_cast<int>(perm.size()) != dim || static_cast<int>(signs.size()) != dim)
      throw ConfigError("perm and signs must have length " + std::to_string(dim));
    std::vector<bool> seen(dim, false);
    for (int p : perm) {
      if (p < 0 || p >= dim || seen[p]) throw ConfigError("perm is not a permutation");
      seen[p] = true;
    }
    for (int s : signs)
      if (s != 1 && s != -1) throw ConfigError("signs entries must be +1 or -1");
    SignedPerm w;
    w.perm = perm;
    w.sign = signs;
    try {
      st.w_index(w);
    } catch (const std::logic_error&) {
      throw ConfigError("signed permutation is not in the finite Weyl group");
    }
    IntVec yc(st.lat.rank, 0);
    if (j.contains("y")) {
      yc = j.at("y").get<IntVec>();
      if (static_cast<int>(yc.size()) != st.lat.rank)
        throw ConfigError("y must have one coordinate per lattice basis vector");
    }
    return awe_from(w, st.lat.from_coords(yc));
  }
  ReducedWord rw;
  rw.word = j.value("word", std::vector<int>{});
  for (int a : rw.word)
    if (a < 0 || a >= st.letters.size())
      throw ConfigError("letter " + std::to_string(a) + " out of range (letters 0.." +
                        std::to_string(st.letters.size() - 1) + ")");
  rw.omega.index = j.value("omega", 0);
  if (rw.omega.index < 0 || rw.omega.index >= st.omega->table_size())
    throw ConfigError("omega index out of range");
  rw.omega.central = IntVec(st.omega->central_rank(), 0);
  if (j.contains("central")) {
    rw.omega.central = j.at("central").get<IntVec>();
    if (static_cast<int>(rw.omega.central.size()) != st.omega->central_rank())
      throw ConfigError("central part must have length " +
                        std::to_string(st.omega->central_rank()));
  }
  return st.realize(rw);
}

std::string element_tag(const Setting& st, const AffineWeylElement& g) {
  ReducedWord rw = st.reduced_word(g);
  std::string tag;
  for (size_t i = 0; i < rw.word.size(); ++i) {
    if (i) tag += '.';
    tag += std::to_string(rw.word[i]);
  }
  if (rw.omega.index != 0) {
    if (!tag.empty()) tag += '|';
    tag += 'p' + std::to_string(rw.omega.index);
  }
  bool nonzero = false;
  for (long long c : rw.omega.central)
    if (c != 0) nonzero = true;
  if (nonzero) {
    if (!tag.empty()) tag += '|';
    tag += 'c';
    for (size_t i = 0; i < rw.omega.central.size(); ++i) {
      if (i) tag += ',';
      tag += std::to_string(rw.omega.central[i]);
    }
  }
  return tag.empty() ? "e" : tag;
}

json pwv_to_json(const PlaneWaveVector& f) {
  const Setting& st = *f.st;
  json j;
  j["lambda"] = json::array();
  for (cd c : f.lambda.lambda) j["lambda"].push_back(complex_json(c));
  j["terms"] = json::array();
  for (size_t w = 0; w < f.coef.size(); ++w) {
    bool zero = true;
    for (int c = 0; c < f.coef[w].size(); ++c)
      if (f.coef[w](c) != cd(0.0)) zero = false;
    if (zero) continue;
    json term;
    term["w"] = st.reduced_word(awe_from(st.W[w], RatVec(st.rs.dim, Rat(0)))).word;
    term["coeff"] = json::array();
    for (int c = 0; c < f.coef[w].size(); ++c)
      term["coeff"].push_back(complex_json(f.coef[w](c)));
    j["terms"].push_back(term);
  }
  return j;
}

PlaneWaveVector pwv_from_json(const Setting& st, const WaModule& mod, const json& j) {
  auto lam = j.at("lambda");
  if (static_cast<int>(lam.size()) != st.rs.dim)
    throw ConfigError("lambda must have " + std::to_string(st.rs.dim) + " coordinates");
  CVec lv;
  for (const auto& c : lam) lv.push_back(complex_from_json(c));
  PlaneWaveVector f = pw_zero(st, mod, make_spectral(st, lv));
  for (const auto& term : j.at("terms")) {
    auto word = term.at("w").get<std::vector<int>>();
    int idx = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (*it < 0 || *it >= st.rs.rank)
        throw ConfigError("finite word letter " + std::to_string(*it) + " out of range");
      idx = st.letter_mul(*it, idx);
    }
    auto coeff = term.at("coeff");
    if (static_cast<int>(coeff.size()) != mod.dim)
      throw ConfigError("coefficient has " + std::to_string(coeff.size()) +
                        " entries, module dimension is " + std::to_string(mod.dim));
    Vec v(mod.dim);
    for (int c = 0; c < mod.dim; ++c) v(c) = complex_from_json(coeff[c]);
    f.coef[idx] += v;
  }
  return f;
}

json algebra_to_json(const Setting& st, const GroupAlgebraElement& e) {
  json out = json::array();
  for (const auto& [g, c] : e.terms) {
    json term;
    term["elem"] = element_to_json(st, g);
    term["coeff"] = complex_json(c);
    out.push_back(term);
  }
  return out;
}

}  // namespace trigdunkl
