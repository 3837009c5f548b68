#pragma once

#include <optional>
#include <string>
#include <vector>

#include "division.hpp"
#include "geometry.hpp"

namespace convdiv {

struct BoundsReport {
  double lower = 0.0;
  bool lower_strict = false;
  double upper = 0.0;
  std::optional<std::vector<int>> mesh_tuple;
  std::optional<DivisionTree> witness;
};

struct SolveReport {
  std::string problem;    // "minmax" | "maxmin"
  std::string magnitude;  // "diameter" | "width" | "inradius"
  int n = 0;
  std::optional<double> value;
  std::optional<BoundsReport> bounds;
  std::optional<DivisionTree> division;
  // Cut list of a parsed report (serialized reports carry cuts, not regions).
  std::vector<DivisionTree::CutRecord> cut_records;
  std::vector<double> per_subset_values;
  bool balanced = false;
  double tolerance = 0.0;

  struct Feasibility {
    int a = 0, b = 0, delta = 0, max_n = 0;
  };
  std::optional<Feasibility> feasibility;
  std::optional<double> oracle_value;
  std::optional<std::string> unsupported;  // set when only bounds are available
};

// Exact optimum width(C)/n realized by n-1 cuts equally spaced in the width
// slab; every subset attains the same width.
SolveReport minmax_width_solve(const ConvexPolygon& poly, int n);

// Smallest-inradius optimum: the unique rho with w(C^rho) = 2*n*rho, located
// through the per-side piecewise-affine equations; division by n-1 parallel
// cuts spaced 2*rho apart across the slab realizing w(C^rho).
SolveReport conway_solve(const ConvexPolygon& poly, int n);

// D/n < optimum <= min(D, sqrt(sum w_i^2/a_i^2)) over nondecreasing integer
// tuples with product at most n.
BoundsReport minmax_diameter_bounds(const OrthogonalWidths& widths, double diam, int n);

// Grid division of the bounding rectangle restricted to the polygon,
// realized as successive cuts; grid cells missing the interior are skipped.
DivisionTree minmax_diameter_mesh_division(const ConvexPolygon& poly, std::pair<int, int> tuple);

}  // namespace convdiv
