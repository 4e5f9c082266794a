#pragma once

#include "trigdunkl/group_algebra.hpp"
#include "trigdunkl/spectral.hpp"

namespace trigdunkl {

// Maximum word length j_element is willing to expand (support grows as 2^l).
inline constexpr int kMaxCocycleLength = 24;

// J_{s_a}(mu) = (mu(Da^vee) s_a + k_a) / (mu(Da^vee) - k_a) for a letter a,
// evaluated at the spectral parameter mu.
GroupAlgebraElement j_letter(const Setting& st, const Multiplicity& mult, int letter,
                             const SpectralParam& mu);

// Cocycle value J_g(lambda), expanded through a reduced word of g.
GroupAlgebraElement j_element(const Setting& st, const Multiplicity& mult,
                              const AffineWeylElement& g, const SpectralParam& lambda);

// Scalar shadow chi(J_g(lambda)) as a closed product over the inversion set.
cd j_scalar(const Setting& st, const Multiplicity& mult, const AffineWeylElement& g,
            const SpectralParam& lambda);

// Closed form for translations: product over positive roots with exponents
// a(y), splitting into the even/odd constants on a split orbit.
cd j_translation_scalar(const Setting& st, const Multiplicity& mult, const RatVec& y,
                        const SpectralParam& lambda);

// c_k(lambda) = prod_{a > 0} (lambda(a^vee) - k_a) / lambda(a^vee).
cd c_function(const Setting& st, const Multiplicity& mult, const SpectralParam& lambda);

}  // namespace trigdunkl
