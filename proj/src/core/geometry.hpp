#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace convdiv {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Relative tolerance for duplicate / collinear vertex elimination,
// scaled by the bounding-box diagonal of the input.
inline constexpr double kVertexEpsRel = 1e-9;
// Relative tolerance grouping ties among diameter pairs.
inline constexpr double kDiamTieRel = 1e-9;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double xx, double yy) : x(xx), y(yy) {}

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double normSq(Vec2 v) { return dot(v, v); }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
// Counterclockwise quarter turn.
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }
inline Vec2 normalized(Vec2 v) {
  double n = norm(v);
  if (n == 0.0) fail(Errc::invalid_argument, "cannot normalize zero vector");
  return {v.x / n, v.y / n};
}

// Angle normalized into [0, 2*pi).
double normalize_angle(double a);

// Unit direction, identified by its angle in [0, 2*pi).
class Direction {
 public:
  explicit Direction(double angle)
      : angle_(normalize_angle(angle)), u_(std::cos(angle_), std::sin(angle_)) {}
  static Direction of_vector(Vec2 v) { return Direction(std::atan2(v.y, v.x)); }

  double angle() const { return angle_; }
  Vec2 unit() const { return u_; }
  Direction reversed() const { return Direction(angle_ + kPi); }
  Direction rotated90() const { return Direction(angle_ + kPi / 2.0); }

 private:
  double angle_;
  Vec2 u_;
};

// Oriented line {x : <x, normal> = offset}. A cut keeps
// {<x,normal> <= offset} as the first (left) child and
// {<x,normal> >= offset} as the second (right) child.
struct LineCut {
  Direction normal;
  double offset = 0.0;

  LineCut(Direction n, double c) : normal(n), offset(c) {}
  double signed_distance(Vec2 p) const { return dot(p, normal.unit()) - offset; }
};

// Region between two parallel lines: low <= <x, normal> <= high.
struct Slab {
  Direction normal;
  double low = 0.0;
  double high = 0.0;

  Slab(Direction n, double lo, double hi) : normal(n), low(lo), high(hi) {}
  double width() const { return high - low; }
};

// Strictly convex polygon with counterclockwise vertices.
// Construct through validate_polygon() (full checks) or from_trusted_ccw()
// (internal fast path: input is already clean).
class ConvexPolygon {
 public:
  static ConvexPolygon from_trusted_ccw(std::vector<Vec2> verts);

  const std::vector<Vec2>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  const Vec2& vertex(std::size_t i) const { return verts_[i % verts_.size()]; }

  Vec2 edge_vector(std::size_t i) const { return vertex(i + 1) - vertex(i); }
  // Unit outward normal of edge i (vertex i to vertex i+1).
  Vec2 edge_normal(std::size_t i) const {
    Vec2 e = normalized(edge_vector(i));
    return {e.y, -e.x};
  }
  double edge_offset(std::size_t i) const { return dot(edge_normal(i), vertex(i)); }

  double area() const;
  Vec2 centroid() const;
  std::pair<Vec2, Vec2> bbox() const;
  // Bounding-box diagonal; the length scale for relative tolerances.
  double scale() const { return scale_; }

 private:
  explicit ConvexPolygon(std::vector<Vec2> verts);
  std::vector<Vec2> verts_;
  double scale_ = 0.0;
};

// Validates raw input: orients counterclockwise, removes duplicate and
// collinear vertices, rejects non-convex or degenerate input.
ConvexPolygon validate_polygon(const std::vector<Vec2>& raw);

double support(const ConvexPolygon& poly, const Direction& u);
double breadth(const ConvexPolygon& poly, const Direction& u);
Slab minimal_slab(const ConvexPolygon& poly, const Direction& u);

struct WidthResult {
  double value;
  Slab slab;       // one boundary line contains edge edge_index
  int edge_index;
};
WidthResult width(const ConvexPolygon& poly);

double diameter_value(const ConvexPolygon& poly);
struct DiameterResult {
  double value;
  std::vector<std::pair<int, int>> pairs;  // all pairs within kDiamTieRel of value
};
DiameterResult diameter(const ConvexPolygon& poly);

struct InradiusResult {
  double value;
  Vec2 center;
};
InradiusResult inradius(const ConvexPolygon& poly);

std::pair<ConvexPolygon, ConvexPolygon> clip(const ConvexPolygon& poly, const LineCut& cut);
// Endpoints of the chord the cut line traces across the polygon.
std::pair<Vec2, Vec2> cut_chord(const ConvexPolygon& poly, const LineCut& cut);

// Nondecreasing projection widths w[0] <= w[1] <= ...
struct OrthogonalWidths {
  std::vector<double> w;
};

// Rectangle frame containing the polygon: side w1 = width(C) along `u`,
// side w2 along the perpendicular.
struct BoundingFrame {
  Direction u;  // width slab normal
  Slab along_u;
  Slab along_v;
};
BoundingFrame bounding_frame(const ConvexPolygon& poly);
OrthogonalWidths orthogonal_widths_2d(const ConvexPolygon& poly);

}  // namespace convdiv
