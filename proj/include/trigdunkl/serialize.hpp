#pragma once

#include <string>

#include "json.hpp"
#include "trigdunkl/plane_wave.hpp"

namespace trigdunkl {

using json = nlohmann::json;

// Shortest-round-trip formatting for CSV cells (JSON numbers already
// round-trip through the library serializer).
std::string fmt17(double x);

json complex_json(cd z);  // [re, im]
// Accepts a plain number, [re, im], or {"re": ..., "im": ...}.
cd complex_from_json(const json& j);

// Group elements serialize as a reduced word plus the length-zero part:
// {"word": [...], "omega": index, "central": [...] when nonzero}.  Input
// alternatively accepts the matrix form {"perm": [...], "signs": [...],
// "y": [...]} with y in lattice coordinates.
json element_to_json(const Setting& st, const AffineWeylElement& g);
AffineWeylElement element_from_json(const Setting& st, const json& j);

// Compact one-cell chamber label, e.g. "0.2|p1|c1,-1"; identity is "e".
std::string element_tag(const Setting& st, const AffineWeylElement& g);

// {"lambda": [[re,im],...], "terms": [{"w": [...], "coeff": [[re,im],...]}]}
// with exact-zero coefficient columns omitted.
json pwv_to_json(const PlaneWaveVector& f);
PlaneWaveVector pwv_from_json(const Setting& st, const WaModule& mod, const json& j);

// [{"elem": ..., "coeff": [re,im]}, ...] sorted by the element ordering.
json algebra_to_json(const Setting& st, const GroupAlgebraElement& e);

}  // namespace trigdunkl
