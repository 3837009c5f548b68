#pragma once

#include <optional>
#include <vector>

#include "arc_body.hpp"
#include "geometry.hpp"
#include "skeleton.hpp"

namespace convdiv {

struct MedialVertex {
  Vec2 point;
  double clearance;
};

struct MedialEdge {
  int v0, v1;
  int side_a, side_b;  // the two polygon edges whose bisector carries this segment
};

// Bisector tree of a convex polygon. Vertices include the polygon corners
// (clearance 0); the maximum clearance equals the inradius.
struct MedialAxis {
  std::vector<MedialVertex> vertices;
  std::vector<MedialEdge> edges;
};

MedialAxis medial_axis(const ConvexPolygon& poly);

// Union of all disks of radius rho contained in the polygon; equals the
// inner offset polygon Minkowski-summed with a rho-disk. rho = 0 yields the
// polygon itself as an all-segment chain.
ArcSegmentBody rounded_body(const ConvexPolygon& poly, double rho);
ArcSegmentBody rounded_body(const ConvexSkeleton& sk, double rho);

// Breadth of the rounded body along the outward normal of the given edge.
double relative_width_rounded(const ConvexPolygon& poly, int edge_index, double rho);

// Continuous piecewise-affine function on [0, limit].
class PiecewiseAffine {
 public:
  PiecewiseAffine(std::vector<double> breakpoints, std::vector<double> slopes,
                  std::vector<double> intercepts);
  double eval(double x) const;
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  std::size_t piece_count() const { return slopes_.size(); }
  double slope(std::size_t i) const { return slopes_[i]; }
  double intercept(std::size_t i) const { return intercepts_[i]; }
  double domain_end() const { return breakpoints_.back(); }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> slopes_, intercepts_;
};

// rho -> breadth of the rounded body along edge L's normal, fitted on the
// clearance breakpoints of the medial axis and verified at piece midpoints.
PiecewiseAffine relative_width_function(const ConvexPolygon& poly, int edge_index);

// Unique root of relative_width(rho) = 2*n*rho in (0, inradius], when the
// crossing happens inside the domain.
std::optional<double> solve_side_equation(const ConvexPolygon& poly, int edge_index, int n);

// Membership test for the rounded body, through the inner offset shape.
bool rounded_contains(const ConvexSkeleton& sk, double rho, Vec2 p, double tol);

}  // namespace convdiv
