#pragma once

#include <vector>

#include "minmax.hpp"

namespace convdiv {

// Chord of maximal length, classified by whether it lies on the boundary.
struct DiameterSegment {
  int v0, v1;     // vertex indices
  bool boundary;  // true when the segment is a polygon edge
};

// Family of diameter segments with pairwise disjoint interiors: either all
// segments share an endpoint (fan) or three of them form an equilateral
// triangle.
struct DiameterSegmentSet {
  std::vector<DiameterSegment> segments;
  bool triangle_type = false;
  int shared_vertex = -1;  // fan type only
  int interior_count = 0;
  int boundary_count = 0;
  int delta() const { return triangle_type ? 1 : 0; }
  int capacity() const { return 2 * interior_count + boundary_count - delta(); }
};

// The optimum equals the diameter of the body itself, for every n.
double maxmin_diameter_value(const ConvexPolygon& poly);

// Maximal disjoint-interior families of diameter segments.
std::vector<DiameterSegmentSet> enumerate_diameter_segment_sets(const ConvexPolygon& poly);

struct DiameterFeasibility {
  bool feasible = false;
  int max_n = 0;
  DiameterSegmentSet best_set;
};
DiameterFeasibility maxmin_diameter_feasible(const ConvexPolygon& poly, int n);

// Division into n subsets all attaining the full diameter; throws
// infeasible_n when no segment family supports n subsets and a
// construction_failed when the built division misses the post-condition.
DivisionTree maxmin_diameter_division(const ConvexPolygon& poly, int n);

// w/n <= optimum <= min(w, D/2).
BoundsReport maxmin_width_bounds(const ConvexPolygon& poly, int n);

struct MaxminWidthOptions {
  double tol = 1e-6;
  int n_phi = 720;        // direction grid over [0, pi)
  double refine = 1e-7;   // direction refinement window target
};
SolveReport maxmin_width_2_solve(const Body& body, const MaxminWidthOptions& opt = {});

double maxmin_inradius_bound(const ConvexPolygon& poly, int n);

// Unique rho with 2*rho = (max-min width optimum of the rho-rounded body),
// found by bisection; the division applies the realizing balanced cut to the
// polygon itself.
SolveReport maxmin_inradius_2_solve(const ConvexPolygon& poly, double tol = 1e-5);

}  // namespace convdiv
