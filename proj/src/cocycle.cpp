#include "trigdunkl/cocycle.hpp"

#include <cmath>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

namespace {

cd letter_k(const Setting& st, const Multiplicity& mult, int letter) {
  const AffineRoot& a = st.letters.letters[letter];
  return mult.k_affine(st.rs, st.orbits, a.root, a.m);
}

void check_denominator(cd z, cd k) {
  if (std::abs(z - k) <= kGenericityMargin * std::max(1.0, std::abs(k)))
    throw GenericityError("cocycle denominator lambda(Da^vee) - k_a is within margin of zero");
}

cd int_pow(cd base, long long e) {
  if (e < 0) {
    base = cd(1.0) / base;
    e = -e;
  }
  cd out = 1.0;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace

GroupAlgebraElement j_letter(const Setting& st, const Multiplicity& mult, int letter,
                             const SpectralParam& mu) {
  const AffineRoot& a = st.letters.letters[letter];
  cd z = mu.pair_coroot[a.root];
  cd k = letter_k(st, mult, letter);
  check_denominator(z, k);
  GroupAlgebraElement out;
  out.add_term(st.letters.refl[letter], z / (z - k));
  out.add_term(awe_identity(st.rs.dim), k / (z - k));
  return out;
}

GroupAlgebraElement j_element(const Setting& st, const Multiplicity& mult,
                              const AffineWeylElement& g, const SpectralParam& lambda) {
  ReducedWord rw = st.reduced_word(g);
  if (static_cast<int>(rw.word.size()) > kMaxCocycleLength)
    throw ConfigError("j_element: refusing to expand an element of length " +
                      std::to_string(rw.word.size()) + " (limit " +
                      std::to_string(kMaxCocycleLength) + ")");
  AffineWeylElement om = st.omega->realize(rw.omega);
  GroupAlgebraElement acc = GroupAlgebraElement::of(om);
  SpectralParam mu = transform(st, om.w, lambda);
  for (int j = static_cast<int>(rw.word.size()) - 1; j >= 0; --j) {
    int letter = rw.word[j];
    acc = j_letter(st, mult, letter, mu).mul(acc);
    mu = transform(st, st.rs.refl[st.letters.letters[letter].root], mu);
  }
  return acc;
}

cd j_scalar(const Setting& st, const Multiplicity& mult, const AffineWeylElement& g,
            const SpectralParam& lambda) {
  cd prod = 1.0;
  for (const AffineRoot& b : inversion_set(st.rs, g)) {
    cd z = lambda.pair_coroot[b.root];
    cd k = mult.k_affine(st.rs, st.orbits, b.root, b.m);
    check_denominator(z, k);
    prod *= (z + k) / (z - k);
  }
  return prod;
}

cd j_translation_scalar(const Setting& st, const Multiplicity& mult, const RatVec& y,
                        const SpectralParam& lambda) {
  cd prod = 1.0;
  for (int i = 0; i < st.rs.npos; ++i) {
    Rat ay = st.rs.pair(i, y);
    if (ay.denominator() != 1)
      throw LatticeError("j_translation_scalar requires y in the translation lattice");
    long long e = ay.numerator();
    if (e == 0) continue;
    cd z = lambda.pair_coroot[i];
    int o = st.rs.worbit[i];
    cd factor;
    if (!st.orbits.is_split(o)) {
      cd k = mult.k(st.orbits.class_base[o]);
      check_denominator(z, k);
      check_denominator(-z, k);
      factor = (z + k) / (z - k);
    } else {
      if (e % 2 != 0) throw std::logic_error("split orbit with odd pairing a(y)");
      cd ke = mult.k(st.orbits.class_base[o]);
      cd ko = mult.k(st.orbits.class_base[o] + 1);
      check_denominator(z, ke);
      check_denominator(-z, ke);
      check_denominator(z, ko);
      check_denominator(-z, ko);
      factor = ((z + ke) / (z - ke)) * ((z + ko) / (z - ko));
      e /= 2;
    }
    prod *= int_pow(factor, e);
  }
  return prod;
}

cd c_function(const Setting& st, const Multiplicity& mult, const SpectralParam& lambda) {
  cd prod = 1.0;
  for (int i = 0; i < st.rs.npos; ++i) {
    cd z = lambda.pair_coroot[i];
    cd k = mult.k_affine(st.rs, st.orbits, i, 0);
    if (std::abs(z) <= kGenericityMargin * std::max(1.0, std::abs(k)))
      throw GenericityError("c_function requires a regular spectral parameter");
    prod *= (z - k) / z;
  }
  return prod;
}

}  // namespace trigdunkl
