#include "medial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace convdiv {

MedialAxis medial_axis(const ConvexPolygon& poly) {
  ConvexSkeleton sk = ConvexSkeleton::compute(poly);
  MedialAxis axis;
  axis.vertices.reserve(sk.vertices().size());
  for (const SkeletonVertex& v : sk.vertices()) axis.vertices.push_back({v.pos, v.clearance});
  axis.edges.reserve(sk.arcs().size());
  for (const SkeletonArc& a : sk.arcs()) axis.edges.push_back({a.v0, a.v1, a.side_a, a.side_b});
  return axis;
}

ArcSegmentBody rounded_body(const ConvexSkeleton& sk, double rho) {
  InnerShape q = sk.inner_at(rho);
  if (q.kind == InnerShape::Kind::point) return ArcSegmentBody::full_circle(q.pts[0], rho);
  if (q.kind == InnerShape::Kind::segment) return ArcSegmentBody::stadium(q.pts[0], q.pts[1], rho);

  ConvexPolygon inner = ConvexPolygon::from_trusted_ccw(q.pts);
  std::vector<ArcFeature> fs;
  const std::size_t n = inner.size();
  fs.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 ni = inner.edge_normal(i);
    fs.push_back(ArcSeg{inner.vertex(i) + ni * rho, inner.vertex(i + 1) + ni * rho});
    Vec2 nj = inner.edge_normal(i + 1);
    double a0 = std::atan2(ni.y, ni.x);
    double sweep = normalize_angle(std::atan2(nj.y, nj.x) - a0);
    if (sweep > 1e-12 && sweep < kTwoPi - 1e-12)
      fs.push_back(ArcArc{inner.vertex(i + 1), rho, a0, sweep});
  }
  return ArcSegmentBody::from_features(std::move(fs));
}

ArcSegmentBody rounded_body(const ConvexPolygon& poly, double rho) {
  if (rho < 0.0) fail(Errc::rho_out_of_range, "rounding radius must be non-negative");
  if (rho == 0.0) {
    std::vector<ArcFeature> fs;
    fs.reserve(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i)
      fs.push_back(ArcSeg{poly.vertex(i), poly.vertex(i + 1)});
    return ArcSegmentBody::from_features(std::move(fs));
  }
  ConvexSkeleton sk = ConvexSkeleton::compute(poly);
  if (rho > sk.inradius() * (1.0 + 1e-9))
    fail(Errc::rho_out_of_range, "rounding radius exceeds the inradius");
  return rounded_body(sk, std::min(rho, sk.inradius()));
}

double relative_width_rounded(const ConvexPolygon& poly, int edge_index, double rho) {
  Direction n = Direction::of_vector(poly.edge_normal(static_cast<std::size_t>(edge_index)));
  if (rho == 0.0) return breadth(poly, n);
  return breadth(rounded_body(poly, rho), n);
}

PiecewiseAffine::PiecewiseAffine(std::vector<double> breakpoints, std::vector<double> slopes,
                                 std::vector<double> intercepts)
    : breakpoints_(std::move(breakpoints)),
      slopes_(std::move(slopes)),
      intercepts_(std::move(intercepts)) {
  if (breakpoints_.size() != slopes_.size() + 1 || slopes_.size() != intercepts_.size() ||
      slopes_.empty())
    fail(Errc::invalid_argument, "inconsistent piecewise-affine data");
}

double PiecewiseAffine::eval(double x) const {
  x = std::clamp(x, breakpoints_.front(), breakpoints_.back());
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  std::size_t i = static_cast<std::size_t>(std::distance(breakpoints_.begin(), it));
  i = std::min(std::max<std::size_t>(i, 1) - 1, slopes_.size() - 1);
  return slopes_[i] * x + intercepts_[i];
}

PiecewiseAffine relative_width_function(const ConvexPolygon& poly, int edge_index) {
  ConvexSkeleton sk = ConvexSkeleton::compute(poly);
  const double limit = sk.inradius();
  Direction n = Direction::of_vector(poly.edge_normal(static_cast<std::size_t>(edge_index)));
  auto f = [&](double rho) {
    if (rho <= 0.0) return breadth(poly, n);
    return breadth(rounded_body(sk, rho), n);
  };

  std::vector<double> bps{0.0, limit};
  for (const SkeletonVertex& v : sk.vertices())
    if (v.clearance > 0.0 && v.clearance < limit) bps.push_back(v.clearance);
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end(),
                        [&](double a, double b) { return b - a <= 1e-12 * limit; }),
            bps.end());
  if (bps.back() < limit) bps.back() = limit;

  std::vector<double> xs, slopes, intercepts;
  xs.push_back(bps[0]);
  double f_left = f(bps[0]);
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    // Subdivide until the midpoint check confirms affinity on the piece.
    struct Span {
      double a, b, fa, fb;
      int depth;
    };
    std::vector<Span> stack{{bps[i], bps[i + 1], f_left, f(bps[i + 1]), 0}};
    std::vector<Span> done;
    while (!stack.empty()) {
      Span s = stack.back();
      stack.pop_back();
      double m = 0.5 * (s.a + s.b);
      double fm = f(m);
      double pred = s.fa + (s.fb - s.fa) * 0.5;
      if (std::abs(fm - pred) <= 1e-9 * std::max(std::abs(fm), 1e-300)) {
        done.push_back(s);
        continue;
      }
      if (s.depth >= 40)
        fail(Errc::not_affine_between_breakpoints,
             "midpoint check failed at minimal subdivision width");
      stack.push_back({m, s.b, fm, s.fb, s.depth + 1});
      stack.push_back({s.a, m, s.fa, fm, s.depth + 1});
    }
    std::sort(done.begin(), done.end(), [](const Span& p, const Span& q) { return p.a < q.a; });
    for (const Span& s : done) {
      double slope = (s.fb - s.fa) / (s.b - s.a);
      xs.push_back(s.b);
      slopes.push_back(slope);
      intercepts.push_back(s.fa - slope * s.a);
    }
    f_left = done.back().fb;
  }
  return PiecewiseAffine(std::move(xs), std::move(slopes), std::move(intercepts));
}

std::optional<double> solve_side_equation(const ConvexPolygon& poly, int edge_index, int n) {
  if (n < 2) fail(Errc::invalid_argument, "need n >= 2");
  PiecewiseAffine f = relative_width_function(poly, edge_index);
  const double target = 2.0 * n;
  auto g = [&](double rho) { return f.eval(rho) - target * rho; };

  const std::vector<double>& bp = f.breakpoints();
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    if (g(bp[i + 1]) > 0.0) continue;
    double a = f.slope(i), b = f.intercept(i);
    double root = b / (target - a);
    root = std::clamp(root, bp[i], bp[i + 1]);
    double residual = std::abs(relative_width_rounded(poly, edge_index, root) - target * root);
    if (residual > 1e-10 * std::max(width(poly).value, 1e-300))
      fail(Errc::verification_failed, "side equation root fails the residual bound");
    return root;
  }
  return std::nullopt;  // crossing lies beyond the inradius for this side
}

namespace {

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  Vec2 ab = b - a;
  double t = normSq(ab) > 0.0 ? std::clamp(dot(p - a, ab) / normSq(ab), 0.0, 1.0) : 0.0;
  return dist(p, a + ab * t);
}

}  // namespace

bool rounded_contains(const ConvexSkeleton& sk, double rho, Vec2 p, double tol) {
  InnerShape q = sk.inner_at(rho);
  double d = 0.0;
  if (q.kind == InnerShape::Kind::point) {
    d = dist(p, q.pts[0]);
  } else if (q.kind == InnerShape::Kind::segment) {
    d = point_segment_distance(p, q.pts[0], q.pts[1]);
  } else {
    ConvexPolygon inner = ConvexPolygon::from_trusted_ccw(q.pts);
    bool inside = true;
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (dot(p, inner.edge_normal(i)) > inner.edge_offset(i)) inside = false;
      dmin = std::min(dmin, point_segment_distance(p, inner.vertex(i), inner.vertex(i + 1)));
    }
    d = inside ? 0.0 : dmin;
  }
  return d <= rho + tol;
}

}  // namespace convdiv
