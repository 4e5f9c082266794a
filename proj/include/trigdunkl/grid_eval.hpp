#pragma once

#include <string>

#include "trigdunkl/chamber_function.hpp"

namespace trigdunkl {

struct GridSpec {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<int> steps;  // cells per axis; each axis has steps+1 points
};

struct GridRow {
  std::vector<double> x;
  std::string chamber;  // element tag of the chamber the value belongs to
  Vec value;
};

// All grid points in odometer order, last axis fastest.
std::vector<std::vector<double>> grid_points(const GridSpec& spec);

// Evaluate a chamber family on the grid.  An interior point yields one row;
// a point within the wall margin of several chambers yields one row per
// adjacent chamber, in element order.  All expansions are forced serially
// up front, so the value loop touches the cache read-only and can run
// under OpenMP; serial and parallel results are byte-identical.
std::vector<GridRow> grid_eval(ChamberData& f, const GridSpec& spec, bool parallel);

// CSV with header x0..,re0,im0,..,chamber; %.17g cells, tag last on every row.
std::string grid_csv(const std::vector<GridRow>& rows, int xdim, int vdim);

}  // namespace trigdunkl
