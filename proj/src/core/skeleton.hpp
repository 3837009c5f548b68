#pragma once

#include <vector>

#include "geometry.hpp"

namespace convdiv {

struct SkeletonVertex {
  Vec2 pos;
  double clearance;  // distance to the defining sides
};

// Straight bisector segment of two polygon sides.
struct SkeletonArc {
  int v0, v1;
  int side_a, side_b;
};

// Inner offset shape at distance rho: a polygon, a ridge segment, or a point.
struct InnerShape {
  enum class Kind { polygon, segment, point };
  Kind kind;
  std::vector<Vec2> pts;  // CCW vertices / two endpoints / one point
};

// Inward edge-offset shrink of a strictly convex polygon. Records the edge
// collapse events, the bisector tree (the medial axis), and supports querying
// the offset polygon at any inward distance.
class ConvexSkeleton {
 public:
  static ConvexSkeleton compute(const ConvexPolygon& poly);

  double inradius() const { return inradius_; }
  Vec2 chebyshev() const { return chebyshev_; }
  const std::vector<SkeletonVertex>& vertices() const { return vertices_; }
  const std::vector<SkeletonArc>& arcs() const { return arcs_; }

  // Offset polygon at inward distance rho in [0, inradius()].
  InnerShape inner_at(double rho) const;

 private:
  struct Event {
    double t;
    int edge;
  };

  int num_edges_ = 0;
  std::vector<Vec2> normals_;
  std::vector<double> offsets_;
  double scale_ = 0.0;
  std::vector<Event> events_;
  std::vector<SkeletonVertex> vertices_;
  std::vector<SkeletonArc> arcs_;
  double inradius_ = 0.0;
  Vec2 chebyshev_;
};

}  // namespace convdiv
