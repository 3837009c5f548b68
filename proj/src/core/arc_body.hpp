#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "geometry.hpp"

namespace convdiv {

struct ArcSeg {
  Vec2 a, b;
};

// Counterclockwise circular arc: points center + radius*(cos t, sin t) for
// t in [start, start + sweep]; the outward normal at parameter t is
// (cos t, sin t). Sweep lies in (0, 2*pi].
struct ArcArc {
  Vec2 center;
  double radius;
  double start;
  double sweep;

  Vec2 point_at(double t) const {
    return {center.x + radius * std::cos(t), center.y + radius * std::sin(t)};
  }
  Vec2 start_point() const { return point_at(start); }
  Vec2 end_point() const { return point_at(start + sweep); }
};

using ArcFeature = std::variant<ArcSeg, ArcArc>;

Vec2 feature_start(const ArcFeature& f);
Vec2 feature_end(const ArcFeature& f);

// Closed convex chain of segments and circular arcs, counterclockwise.
// The tangent direction rotates monotonically by a full turn.
class ArcSegmentBody {
 public:
  static ArcSegmentBody from_features(std::vector<ArcFeature> fs);
  static ArcSegmentBody full_circle(Vec2 center, double radius);
  static ArcSegmentBody stadium(Vec2 a, Vec2 b, double radius);

  const std::vector<ArcFeature>& features() const { return features_; }
  std::size_t size() const { return features_.size(); }
  double scale() const { return scale_; }

  // Unwrapped outward-normal angle range covered by feature i.
  double normal_start(std::size_t i) const { return starts_[i]; }
  double normal_end(std::size_t i) const { return ends_[i]; }
  double base_angle() const { return starts_.empty() ? 0.0 : starts_[0]; }

  // Index of the feature whose normal range contains (or precedes) the
  // lifted angle of u.
  std::size_t locate(const Direction& u) const;

 private:
  std::vector<ArcFeature> features_;
  std::vector<double> starts_, ends_;
  double scale_ = 0.0;
};

double support(const ArcSegmentBody& body, const Direction& u);
double breadth(const ArcSegmentBody& body, const Direction& u);

// Support anchor: the touching vertex (r = 0) or arc center with its radius.
struct SupportAnchor {
  Vec2 anchor;
  double r;
};
SupportAnchor support_anchor(const ArcSegmentBody& body, const Direction& u);

// Minimal breadth over all directions, located from the feature-normal
// critical directions and polished by ternary search to the given tolerance
// (radians on the direction parameter).
double width_arc(const ArcSegmentBody& body, double tol = 1e-10);

std::pair<ArcSegmentBody, ArcSegmentBody> clip(const ArcSegmentBody& body, const LineCut& cut);
std::pair<Vec2, Vec2> cut_chord(const ArcSegmentBody& body, const LineCut& cut);

}  // namespace convdiv
