#include "trigdunkl/grid_eval.hpp"

#include "trigdunkl/errors.hpp"
#include "trigdunkl/serialize.hpp"

namespace trigdunkl {

std::vector<std::vector<double>> grid_points(const GridSpec& spec) {
  size_t d = spec.lo.size();
  if (spec.hi.size() != d || spec.steps.size() != d)
    throw ConfigError("grid lo, hi, and steps must have the same length");
  for (int s : spec.steps)
    if (s < 1) throw ConfigError("grid steps must be at least 1 per axis");
  std::vector<std::vector<double>> pts;
  std::vector<int> idx(d, 0);
  while (true) {
    std::vector<double> x(d);
    for (size_t a = 0; a < d; ++a)
      x[a] = spec.lo[a] +
             (spec.hi[a] - spec.lo[a]) * static_cast<double>(idx[a]) / spec.steps[a];
    pts.push_back(x);
    size_t a = d;
    while (a > 0) {
      --a;
      if (++idx[a] <= spec.steps[a]) break;
      idx[a] = 0;
      if (a == 0) return pts;
    }
    if (d == 0) return pts;
  }
}

std::vector<GridRow> grid_eval(ChamberData& f, const GridSpec& spec, bool parallel) {
  const Setting& st = f.setting();
  if (static_cast<int>(spec.lo.size()) != st.rs.dim)
    throw ConfigError("grid dimension " + std::to_string(spec.lo.size()) +
                      " does not match the ambient dimension " + std::to_string(st.rs.dim));
  std::vector<std::vector<double>> pts = grid_points(spec);
  std::vector<GridRow> rows;
  std::vector<const PlaneWaveVector*> handles;
  for (const auto& x : pts) {
    for (const AffineWeylElement& c : locate_chambers_closed(st, x)) {
      const PlaneWaveVector& e = f.chamber_expansion(c);
      GridRow row;
      row.x = x;
      row.chamber = element_tag(st, c);
      rows.push_back(std::move(row));
      handles.push_back(&e);
    }
  }
  long long n = static_cast<long long>(rows.size());
  if (parallel) {
#ifdef TRIGDUNKL_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < n; ++i) rows[i].value = handles[i]->evaluate(rows[i].x);
  } else {
    for (long long i = 0; i < n; ++i) rows[i].value = handles[i]->evaluate(rows[i].x);
  }
  return rows;
}

std::string grid_csv(const std::vector<GridRow>& rows, int xdim, int vdim) {
  std::string out;
  for (int a = 0; a < xdim; ++a) out += "x" + std::to_string(a) + ",";
  for (int c = 0; c < vdim; ++c)
    out += "re" + std::to_string(c) + ",im" + std::to_string(c) + ",";
  out += "chamber\n";
  for (const GridRow& r : rows) {
    for (double x : r.x) out += fmt17(x) + ",";
    for (int c = 0; c < vdim; ++c)
      out += fmt17(r.value(c).real()) + "," + fmt17(r.value(c).imag()) + ",";
    out += r.chamber + "\n";
  }
  return out;
}

}  // namespace trigdunkl
