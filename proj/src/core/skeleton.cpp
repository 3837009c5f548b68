#include "skeleton.hpp"

#include <algorithm>
#include <limits>

namespace convdiv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Traj {
  Vec2 p;  // position at t = 0 (intersection of the two edge lines)
  Vec2 d;  // inward drift per unit offset
  bool ok;
};

// Trajectory of the vertex shared by the offset lines of edges i and j:
// <n_i, x> = c_i - t, <n_j, x> = c_j - t.
Traj trajectory(const std::vector<Vec2>& n, const std::vector<double>& c, int i, int j) {
  double det = cross(n[i], n[j]);
  if (std::abs(det) <= 1e-12) return {Vec2{}, Vec2{}, false};
  auto solve = [&](double a, double b) {
    return Vec2{(a * n[j].y - b * n[i].y) / det, (n[i].x * b - n[j].x * a) / det};
  };
  return {solve(c[i], c[j]), solve(-1.0, -1.0), true};
}

}  // namespace

ConvexSkeleton ConvexSkeleton::compute(const ConvexPolygon& poly) {
  const int k = static_cast<int>(poly.size());
  ConvexSkeleton sk;
  sk.num_edges_ = k;
  sk.scale_ = poly.scale();
  sk.normals_.resize(k);
  sk.offsets_.resize(k);
  for (int i = 0; i < k; ++i) {
    sk.normals_[i] = poly.edge_normal(static_cast<std::size_t>(i));
    sk.offsets_[i] = poly.edge_offset(static_cast<std::size_t>(i));
  }

  const double pos_tol = 1e-9 * sk.scale_;

  // Corner vertices: slot (i, i+1) starts at polygon vertex i+1.
  sk.vertices_.reserve(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) sk.vertices_.push_back({poly.vertex(static_cast<std::size_t>(i)), 0.0});

  auto add_vertex = [&](Vec2 pos, double cl) -> int {
    for (int v = k; v < static_cast<int>(sk.vertices_.size()); ++v) {
      if (dist(sk.vertices_[static_cast<std::size_t>(v)].pos, pos) <= pos_tol &&
          std::abs(sk.vertices_[static_cast<std::size_t>(v)].clearance - cl) <= pos_tol)
        return v;
    }
    sk.vertices_.push_back({pos, cl});
    return static_cast<int>(sk.vertices_.size()) - 1;
  };
  auto emit_arc = [&](int v0, int v1, int a, int b) {
    if (v0 == v1) return;
    sk.arcs_.push_back({v0, v1, a, b});
  };

  std::vector<int> next(static_cast<std::size_t>(k)), prev(static_cast<std::size_t>(k));
  std::vector<char> alive(static_cast<std::size_t>(k), 1);
  std::vector<int> birth(static_cast<std::size_t>(k));  // vertex id where slot (i, next[i]) starts
  for (int i = 0; i < k; ++i) {
    next[static_cast<std::size_t>(i)] = (i + 1) % k;
    prev[static_cast<std::size_t>(i)] = (i + k - 1) % k;
    birth[static_cast<std::size_t>(i)] = (i + 1) % k;
  }

  std::vector<double> collapse(static_cast<std::size_t>(k), kInf);
  auto slot_pos = [&](int i, int j, double t) -> Vec2 {
    Traj tr = trajectory(sk.normals_, sk.offsets_, i, j);
    return tr.p + t * tr.d;
  };
  auto recompute = [&](int j) {
    int i = prev[static_cast<std::size_t>(j)], l = next[static_cast<std::size_t>(j)];
    Traj a = trajectory(sk.normals_, sk.offsets_, i, j);
    Traj b = trajectory(sk.normals_, sk.offsets_, j, l);
    if (!a.ok || !b.ok) {
      collapse[static_cast<std::size_t>(j)] = kInf;
      return;
    }
    Vec2 tau = perp(sk.normals_[static_cast<std::size_t>(j)]);  // edge direction
    double s0 = dot(tau, b.p - a.p);
    double s1 = dot(tau, b.d - a.d);
    collapse[static_cast<std::size_t>(j)] = (s1 >= -1e-12) ? kInf : -s0 / s1;
  };
  for (int j = 0; j < k; ++j) recompute(j);

  int active = k;
  double last_t = 0.0;
  while (active > 3) {
    int j = -1;
    double t = kInf;
    for (int e = 0; e < k; ++e) {
      if (!alive[static_cast<std::size_t>(e)]) continue;
      if (collapse[static_cast<std::size_t>(e)] < t) {
        t = collapse[static_cast<std::size_t>(e)];
        j = e;
      }
    }
    if (j < 0 || !std::isfinite(t))
      fail(Errc::construction_failed, "polygon shrink found no collapse event");
    t = std::max(t, last_t);
    last_t = t;

    int i = prev[static_cast<std::size_t>(j)], l = next[static_cast<std::size_t>(j)];
    Vec2 va = slot_pos(i, j, t);
    Vec2 vb = slot_pos(j, l, t);
    int V = add_vertex((va + vb) * 0.5, t);
    emit_arc(birth[static_cast<std::size_t>(i)], V, i, j);
    emit_arc(birth[static_cast<std::size_t>(j)], V, j, l);

    alive[static_cast<std::size_t>(j)] = 0;
    next[static_cast<std::size_t>(i)] = l;
    prev[static_cast<std::size_t>(l)] = i;
    --active;
    sk.events_.push_back({t, j});
    birth[static_cast<std::size_t>(i)] = V;
    recompute(i);
    recompute(l);
  }

  // Final three edges meet at their common equidistant point.
  int a = -1;
  for (int e = 0; e < k; ++e)
    if (alive[static_cast<std::size_t>(e)]) {
      a = e;
      break;
    }
  int b = next[static_cast<std::size_t>(a)];
  int c = next[static_cast<std::size_t>(b)];
  {
    // Rows [n.x n.y 1] [x y t]^T = c_i. Three distinct unit normals are never
    // affinely dependent, so the system is regular.
    const Vec2 n1 = sk.normals_[static_cast<std::size_t>(a)];
    const Vec2 n2 = sk.normals_[static_cast<std::size_t>(b)];
    const Vec2 n3 = sk.normals_[static_cast<std::size_t>(c)];
    const double c1 = sk.offsets_[static_cast<std::size_t>(a)];
    const double c2 = sk.offsets_[static_cast<std::size_t>(b)];
    const double c3 = sk.offsets_[static_cast<std::size_t>(c)];
    double det = n1.x * (n2.y - n3.y) - n1.y * (n2.x - n3.x) + (n2.x * n3.y - n3.x * n2.y);
    if (std::abs(det) <= 1e-16)
      fail(Errc::construction_failed, "degenerate terminal configuration in polygon shrink");
    double x = (c1 * (n2.y - n3.y) - n1.y * (c2 - c3) + (c2 * n3.y - c3 * n2.y)) / det;
    double y = (n1.x * (c2 - c3) - c1 * (n2.x - n3.x) + (n2.x * c3 - n3.x * c2)) / det;
    double t = (n1.x * (n2.y * c3 - n3.y * c2) - n1.y * (n2.x * c3 - n3.x * c2) +
                c1 * (n2.x * n3.y - n3.x * n2.y)) /
               det;
    int V = add_vertex({x, y}, t);
    emit_arc(birth[static_cast<std::size_t>(a)], V, a, b);
    emit_arc(birth[static_cast<std::size_t>(b)], V, b, c);
    emit_arc(birth[static_cast<std::size_t>(c)], V, c, a);
  }

  double best = 0.0;
  for (const SkeletonVertex& v : sk.vertices_) best = std::max(best, v.clearance);
  sk.inradius_ = best;
  Vec2 acc{0, 0};
  int cnt = 0;
  for (const SkeletonVertex& v : sk.vertices_) {
    if (v.clearance >= best - pos_tol) {
      acc = acc + v.pos;
      ++cnt;
    }
  }
  sk.chebyshev_ = acc * (1.0 / std::max(cnt, 1));
  return sk;
}

InnerShape ConvexSkeleton::inner_at(double rho) const {
  const double tol = 1e-12 * scale_;
  if (rho < -tol || rho > inradius_ + 1e-9 * scale_)
    fail(Errc::rho_out_of_range, "offset distance outside [0, inradius]");
  rho = std::clamp(rho, 0.0, inradius_);

  const int k = num_edges_;
  std::vector<int> next(static_cast<std::size_t>(k)), prev(static_cast<std::size_t>(k));
  std::vector<char> alive(static_cast<std::size_t>(k), 1);
  for (int i = 0; i < k; ++i) {
    next[static_cast<std::size_t>(i)] = (i + 1) % k;
    prev[static_cast<std::size_t>(i)] = (i + k - 1) % k;
  }
  int active = k;
  for (const Event& ev : events_) {
    if (ev.t >= rho - tol) break;
    int j = ev.edge;
    int i = prev[static_cast<std::size_t>(j)], l = next[static_cast<std::size_t>(j)];
    alive[static_cast<std::size_t>(j)] = 0;
    next[static_cast<std::size_t>(i)] = l;
    prev[static_cast<std::size_t>(l)] = i;
    --active;
  }

  int start = -1;
  for (int e = 0; e < k; ++e)
    if (alive[static_cast<std::size_t>(e)]) {
      start = e;
      break;
    }

  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(active));
  int i = start;
  do {
    int j = next[static_cast<std::size_t>(i)];
    Traj tr = trajectory(normals_, offsets_, i, j);
    if (tr.ok) pts.push_back(tr.p + rho * tr.d);
    i = j;
  } while (i != start);

  // Collapse coincident ring vertices.
  const double pos_tol = 1e-9 * scale_;
  std::vector<Vec2> uniq;
  for (const Vec2& p : pts) {
    if (!uniq.empty() && dist(uniq.back(), p) <= pos_tol) continue;
    uniq.push_back(p);
  }
  while (uniq.size() > 1 && dist(uniq.front(), uniq.back()) <= pos_tol) uniq.pop_back();

  InnerShape shape;
  if (uniq.size() >= 3) {
    // Guard against near-degenerate slivers: treat as a segment if the ring
    // has collapsed onto a line.
    double a2 = 0.0;
    for (std::size_t q = 0; q < uniq.size(); ++q)
      a2 += cross(uniq[q], uniq[(q + 1) % uniq.size()]);
    if (std::abs(a2) > pos_tol * pos_tol) {
      shape.kind = InnerShape::Kind::polygon;
      shape.pts = std::move(uniq);
      return shape;
    }
    // Degenerate ring: keep the two extreme points.
    Vec2 dir = uniq[1] - uniq[0];
    if (normSq(dir) == 0.0) dir = Vec2{1, 0};
    auto [mn, mx] = std::minmax_element(
        uniq.begin(), uniq.end(), [&](Vec2 p, Vec2 q) { return dot(p, dir) < dot(q, dir); });
    uniq = {*mn, *mx};
  }
  if (uniq.size() == 2 && dist(uniq[0], uniq[1]) > pos_tol) {
    shape.kind = InnerShape::Kind::segment;
    shape.pts = std::move(uniq);
    return shape;
  }
  shape.kind = InnerShape::Kind::point;
  shape.pts = {uniq.empty() ? chebyshev_ : uniq.front()};
  return shape;
}

}  // namespace convdiv
