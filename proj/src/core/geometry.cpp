#include "geometry.hpp"

#include <algorithm>
#include <limits>

#include "skeleton.hpp"

namespace convdiv {

double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

namespace {

double bbox_diagonal(const std::vector<Vec2>& pts) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = xmax;
  for (const Vec2& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

double signed_area2(const std::vector<Vec2>& v) {
  double s = 0.0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % n];
    s += cross(a, b);
  }
  return s;
}

// Removes adjacent duplicates and collinear vertices in place. Vertices whose
// distance to the line through their neighbours is below eps are dropped.
void drop_duplicates_and_collinear(std::vector<Vec2>& v, double eps) {
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() >= 3;) {
      std::size_t n = v.size();
      const Vec2& prev = v[(i + n - 1) % n];
      const Vec2& cur = v[i];
      const Vec2& next = v[(i + 1) % n];
      if (dist(cur, next) <= eps) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        continue;
      }
      double chord = dist(next, prev);
      double dev = chord > 0.0 ? std::abs(cross(cur - prev, next - prev)) / chord : 0.0;
      if (dev <= eps) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        continue;
      }
      ++i;
    }
  }
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Vec2> verts) : verts_(std::move(verts)) {
  scale_ = bbox_diagonal(verts_);
}

ConvexPolygon ConvexPolygon::from_trusted_ccw(std::vector<Vec2> verts) {
  double eps = kVertexEpsRel * bbox_diagonal(verts);
  drop_duplicates_and_collinear(verts, eps);
  if (verts.size() < 3) fail(Errc::degenerate_area, "polygon degenerated to fewer than 3 vertices");
  return ConvexPolygon(std::move(verts));
}

double ConvexPolygon::area() const { return 0.5 * signed_area2(verts_); }

Vec2 ConvexPolygon::centroid() const {
  double a2 = 0.0;
  Vec2 c{0.0, 0.0};
  for (std::size_t i = 0, n = verts_.size(); i < n; ++i) {
    const Vec2& p = verts_[i];
    const Vec2& q = verts_[(i + 1) % n];
    double w = cross(p, q);
    a2 += w;
    c = c + (p + q) * w;
  }
  return c * (1.0 / (3.0 * a2));
}

std::pair<Vec2, Vec2> ConvexPolygon::bbox() const {
  Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2 hi = -lo;
  for (const Vec2& p : verts_) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  return {lo, hi};
}

ConvexPolygon validate_polygon(const std::vector<Vec2>& raw) {
  if (raw.size() < 3) fail(Errc::too_few_vertices, "polygon needs at least 3 vertices");
  for (const Vec2& p : raw) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      fail(Errc::invalid_argument, "non-finite vertex coordinate");
  }

  std::vector<Vec2> v = raw;
  double diag = bbox_diagonal(v);
  if (diag <= 0.0) fail(Errc::degenerate_area, "all vertices coincide");
  double eps = kVertexEpsRel * diag;

  double a2 = signed_area2(v);
  if (std::abs(a2) <= eps * diag) fail(Errc::degenerate_area, "polygon area is zero");
  if (a2 < 0.0) std::reverse(v.begin(), v.end());

  drop_duplicates_and_collinear(v, eps);
  if (v.size() < 3) fail(Errc::degenerate_area, "polygon degenerated to fewer than 3 vertices");

  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    Vec2 e1 = v[(i + 1) % n] - v[i];
    Vec2 e2 = v[(i + 2) % n] - v[(i + 1) % n];
    if (cross(e1, e2) <= 0.0) fail(Errc::not_convex, "vertices are not in strictly convex position");
  }
  return ConvexPolygon::from_trusted_ccw(std::move(v));
}

double support(const ConvexPolygon& poly, const Direction& u) {
  Vec2 d = u.unit();
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec2& p : poly.vertices()) best = std::max(best, dot(p, d));
  return best;
}

double breadth(const ConvexPolygon& poly, const Direction& u) {
  return support(poly, u) + support(poly, u.reversed());
}

Slab minimal_slab(const ConvexPolygon& poly, const Direction& u) {
  double hi = support(poly, u);
  double lo = -support(poly, u.reversed());
  return Slab(u, lo, hi);
}

WidthResult width(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  double best = std::numeric_limits<double>::infinity();
  int best_edge = 0;

  if (n <= 48) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec2 ni = poly.edge_normal(i);
      double hi = poly.edge_offset(i);
      double lo = std::numeric_limits<double>::infinity();
      for (const Vec2& p : poly.vertices()) lo = std::min(lo, dot(p, ni));
      double b = hi - lo;
      if (b < best) {
        best = b;
        best_edge = static_cast<int>(i);
      }
    }
  } else {
    // Antipodal walk: the vertex minimizing <n_i, .> advances monotonically
    // with the edge index.
    Vec2 n0 = poly.edge_normal(0);
    std::size_t j = 0;
    for (std::size_t k = 1; k < n; ++k)
      if (dot(poly.vertex(k), n0) < dot(poly.vertex(j), n0)) j = k;
    for (std::size_t i = 0; i < n; ++i) {
      Vec2 ni = poly.edge_normal(i);
      std::size_t guard = 0;
      while (guard++ <= n && dot(poly.vertex(j + 1), ni) < dot(poly.vertex(j), ni)) j = (j + 1) % n;
      double b = poly.edge_offset(i) - dot(poly.vertex(j), ni);
      if (b < best) {
        best = b;
        best_edge = static_cast<int>(i);
      }
    }
  }

  Direction u = Direction::of_vector(poly.edge_normal(static_cast<std::size_t>(best_edge)));
  double hi = poly.edge_offset(static_cast<std::size_t>(best_edge));
  return WidthResult{best, Slab(u, hi - best, hi), best_edge};
}

double diameter_value(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  double best = 0.0;
  if (n <= 48) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, dist(poly.vertex(i), poly.vertex(j)));
    return best;
  }
  // Rotating antipodal pairs.
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 e = poly.edge_vector(i);
    std::size_t guard = 0;
    while (guard++ <= n && cross(e, poly.vertex(j + 1) - poly.vertex(j)) > 0.0) j = (j + 1) % n;
    best = std::max(best, dist(poly.vertex(i), poly.vertex(j)));
    best = std::max(best, dist(poly.vertex(i + 1), poly.vertex(j)));
  }
  return best;
}

DiameterResult diameter(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  double value = diameter_value(poly);
  DiameterResult res;
  res.value = value;
  double tol = kDiamTieRel * value;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist(poly.vertex(i), poly.vertex(j)) >= value - tol)
        res.pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return res;
}

InradiusResult inradius(const ConvexPolygon& poly) {
  const ConvexSkeleton sk = ConvexSkeleton::compute(poly);
  return InradiusResult{sk.inradius(), sk.chebyshev()};
}

std::pair<ConvexPolygon, ConvexPolygon> clip(const ConvexPolygon& poly, const LineCut& cut) {
  const std::size_t n = poly.size();
  const double eps = 1e-12 * poly.scale();

  std::vector<double> d(n);
  double dmin = std::numeric_limits<double>::infinity(), dmax = -dmin;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = cut.signed_distance(poly.vertex(i));
    dmin = std::min(dmin, d[i]);
    dmax = std::max(dmax, d[i]);
  }
  if (dmin >= -eps || dmax <= eps)
    fail(Errc::cut_misses_interior, "cut line does not cross the interior");

  std::vector<Vec2> left, right;
  left.reserve(n + 2);
  right.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = poly.vertex(i);
    const Vec2& b = poly.vertex(i + 1);
    double da = d[i], db = d[(i + 1) % n];
    if (da <= eps) left.push_back(a);
    if (da >= -eps) right.push_back(a);
    if ((da < -eps && db > eps) || (da > eps && db < -eps)) {
      double t = da / (da - db);
      Vec2 x = a + (b - a) * t;
      left.push_back(x);
      right.push_back(x);
    }
  }
  return {ConvexPolygon::from_trusted_ccw(std::move(left)),
          ConvexPolygon::from_trusted_ccw(std::move(right))};
}

std::pair<Vec2, Vec2> cut_chord(const ConvexPolygon& poly, const LineCut& cut) {
  const std::size_t n = poly.size();
  const double eps = 1e-12 * poly.scale();
  std::vector<Vec2> hits;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = poly.vertex(i);
    const Vec2& b = poly.vertex(i + 1);
    double da = cut.signed_distance(a), db = cut.signed_distance(b);
    if (std::abs(da) <= eps) {
      hits.push_back(a);
    } else if ((da < -eps && db > eps) || (da > eps && db < -eps)) {
      double t = da / (da - db);
      hits.push_back(a + (b - a) * t);
    }
  }
  // Deduplicate; a valid chord has exactly two distinct endpoints.
  std::vector<Vec2> uniq;
  for (const Vec2& h : hits) {
    bool dup = false;
    for (const Vec2& u : uniq)
      if (dist(u, h) <= 10 * eps) dup = true;
    if (!dup) uniq.push_back(h);
  }
  if (uniq.size() < 2) fail(Errc::cut_misses_interior, "cut line does not produce a chord");
  return {uniq.front(), uniq.back()};
}

BoundingFrame bounding_frame(const ConvexPolygon& poly) {
  WidthResult w = width(poly);
  Direction u = w.slab.normal;
  Direction v = u.rotated90();
  return BoundingFrame{u, w.slab, minimal_slab(poly, v)};
}

OrthogonalWidths orthogonal_widths_2d(const ConvexPolygon& poly) {
  BoundingFrame f = bounding_frame(poly);
  double w1 = f.along_u.width();
  double w2 = f.along_v.width();
  if (w1 > w2 * (1.0 + 1e-9))
    fail(Errc::verification_failed, "width exceeds perpendicular extent");
  return OrthogonalWidths{{w1, w2}};
}

}  // namespace convdiv
