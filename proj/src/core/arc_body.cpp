#include "arc_body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace convdiv {

namespace {

constexpr double kAngSlack = 1e-9;

double raw_normal_start(const ArcFeature& f) {
  if (const ArcSeg* s = std::get_if<ArcSeg>(&f)) {
    Vec2 e = normalized(s->b - s->a);
    return normalize_angle(std::atan2(-e.x, e.y));
  }
  return normalize_angle(std::get<ArcArc>(f).start);
}

double feature_sweep(const ArcFeature& f) {
  if (std::holds_alternative<ArcSeg>(f)) return 0.0;
  return std::get<ArcArc>(f).sweep;
}

}  // namespace

Vec2 feature_start(const ArcFeature& f) {
  if (const ArcSeg* s = std::get_if<ArcSeg>(&f)) return s->a;
  return std::get<ArcArc>(f).start_point();
}

Vec2 feature_end(const ArcFeature& f) {
  if (const ArcSeg* s = std::get_if<ArcSeg>(&f)) return s->b;
  return std::get<ArcArc>(f).end_point();
}

ArcSegmentBody ArcSegmentBody::from_features(std::vector<ArcFeature> fs) {
  if (fs.empty()) fail(Errc::invalid_argument, "empty feature chain");

  ArcSegmentBody body;

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = xmax;
  auto grow = [&](Vec2 p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  for (const ArcFeature& f : fs) {
    grow(feature_start(f));
    grow(feature_end(f));
    if (const ArcArc* a = std::get_if<ArcArc>(&f)) {
      grow(a->center + Vec2{a->radius, a->radius});
      grow(a->center - Vec2{a->radius, a->radius});
    }
  }
  body.scale_ = std::hypot(xmax - xmin, ymax - ymin);
  const double pos_tol = 1e-7 * body.scale_;

  for (std::size_t i = 0; i < fs.size(); ++i) {
    const ArcFeature& cur = fs[i];
    const ArcFeature& nxt = fs[(i + 1) % fs.size()];
    if (dist(feature_end(cur), feature_start(nxt)) > pos_tol)
      fail(Errc::construction_failed, "feature chain is not closed");
    if (const ArcArc* a = std::get_if<ArcArc>(&cur)) {
      if (!(a->radius > 0.0) || !(a->sweep > 0.0) || a->sweep > kTwoPi + kAngSlack)
        fail(Errc::invalid_argument, "invalid arc parameters");
    } else {
      const ArcSeg& s = std::get<ArcSeg>(cur);
      if (dist(s.a, s.b) <= 0.0) fail(Errc::invalid_argument, "zero-length segment feature");
    }
  }

  // Unwrap the outward-normal angle ranges; the chain is convex exactly when
  // they advance monotonically by one full turn.
  body.starts_.resize(fs.size());
  body.ends_.resize(fs.size());
  double base = raw_normal_start(fs[0]);
  body.starts_[0] = base;
  body.ends_[0] = base + feature_sweep(fs[0]);
  for (std::size_t i = 1; i < fs.size(); ++i) {
    double raw = raw_normal_start(fs[i]);
    double prev_end = body.ends_[i - 1];
    double delta = normalize_angle(raw - normalize_angle(prev_end));
    if (delta > kTwoPi - 1e-6) delta -= kTwoPi;  // fp wobble just below the previous end
    if (delta < -1e-6) fail(Errc::construction_failed, "normal direction not monotone");
    body.starts_[i] = prev_end + delta;
    body.ends_[i] = body.starts_[i] + feature_sweep(fs[i]);
  }
  double total = (base + kTwoPi) - body.ends_.back();
  if (total < -1e-6) fail(Errc::construction_failed, "normal ranges overrun a full turn");

  body.features_ = std::move(fs);
  return body;
}

ArcSegmentBody ArcSegmentBody::full_circle(Vec2 center, double radius) {
  if (!(radius > 0.0)) fail(Errc::invalid_argument, "circle radius must be positive");
  return from_features({ArcArc{center, radius, 0.0, kTwoPi}});
}

ArcSegmentBody ArcSegmentBody::stadium(Vec2 a, Vec2 b, double radius) {
  if (!(radius > 0.0)) fail(Errc::invalid_argument, "stadium radius must be positive");
  Vec2 u = normalized(b - a);
  Vec2 n{u.y, -u.x};
  double phi = std::atan2(n.y, n.x);
  std::vector<ArcFeature> fs;
  fs.push_back(ArcSeg{a + n * radius, b + n * radius});
  fs.push_back(ArcArc{b, radius, phi, kPi});
  fs.push_back(ArcSeg{b - n * radius, a - n * radius});
  fs.push_back(ArcArc{a, radius, phi + kPi, kPi});
  return from_features(std::move(fs));
}

std::size_t ArcSegmentBody::locate(const Direction& u) const {
  double base = starts_[0];
  double phi = base + normalize_angle(u.angle() - base);
  auto it = std::upper_bound(starts_.begin(), starts_.end(), phi);
  if (it == starts_.begin()) return features_.size() - 1;
  return static_cast<std::size_t>(std::distance(starts_.begin(), it)) - 1;
}

namespace {

struct Candidate {
  double value;
  Vec2 anchor;
  double r;
};

Candidate feature_support(const ArcFeature& f, const Direction& u) {
  Vec2 d = u.unit();
  if (const ArcSeg* s = std::get_if<ArcSeg>(&f)) {
    double va = dot(s->a, d), vb = dot(s->b, d);
    return va >= vb ? Candidate{va, s->a, 0.0} : Candidate{vb, s->b, 0.0};
  }
  const ArcArc& a = std::get<ArcArc>(f);
  Candidate best{dot(a.start_point(), d), a.start_point(), 0.0};
  double ve = dot(a.end_point(), d);
  if (ve > best.value) best = {ve, a.end_point(), 0.0};
  double local = normalize_angle(u.angle() - a.start);
  if (local <= a.sweep + kAngSlack) {
    double vc = dot(a.center, d) + a.radius;
    if (vc > best.value) best = {vc, a.center, a.radius};
  }
  return best;
}

Candidate body_support(const ArcSegmentBody& body, const Direction& u) {
  std::size_t n = body.size();
  std::size_t idx = body.locate(u);
  Candidate best{-std::numeric_limits<double>::infinity(), Vec2{}, 0.0};
  for (std::size_t off = 0; off < 3; ++off) {
    std::size_t i = (idx + n - 1 + off) % n;
    Candidate c = feature_support(body.features()[i], u);
    if (c.value > best.value) best = c;
    if (n <= 2 && off >= n - 1) break;
  }
  return best;
}

}  // namespace

double support(const ArcSegmentBody& body, const Direction& u) { return body_support(body, u).value; }

double breadth(const ArcSegmentBody& body, const Direction& u) {
  return support(body, u) + support(body, u.reversed());
}

SupportAnchor support_anchor(const ArcSegmentBody& body, const Direction& u) {
  Candidate c = body_support(body, u);
  return SupportAnchor{c.anchor, c.r};
}

double width_arc(const ArcSegmentBody& body, double tol) {
  // Critical directions: segment normals and arc range endpoints, folded to
  // [0, pi) since breadth has period pi.
  std::vector<double> dirs;
  dirs.reserve(2 * body.size());
  auto fold = [](double a) {
    double r = normalize_angle(a);
    if (r >= kPi) r -= kPi;
    return r;
  };
  for (std::size_t i = 0; i < body.size(); ++i) {
    dirs.push_back(fold(body.normal_start(i)));
    if (body.normal_end(i) != body.normal_start(i)) dirs.push_back(fold(body.normal_end(i)));
  }
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             dirs.end());

  auto eval = [&](double theta) { return breadth(body, Direction(theta)); };

  double best = std::numeric_limits<double>::infinity();
  double best_dir = dirs.empty() ? 0.0 : dirs[0];
  for (double d : dirs) {
    double v = eval(d);
    if (v < best) {
      best = v;
      best_dir = d;
    }
  }

  // Between consecutive critical directions the support pair is fixed and
  // breadth is sinusoidal; its stationary direction is aligned with the
  // anchor difference.
  const std::size_t m = dirs.size();
  for (std::size_t i = 0; i < m; ++i) {
    double a = dirs[i];
    double b = (i + 1 < m) ? dirs[i + 1] : dirs[0] + kPi;
    if (b - a < 1e-12) continue;
    double mid = 0.5 * (a + b);
    SupportAnchor top = support_anchor(body, Direction(mid));
    SupportAnchor bot = support_anchor(body, Direction(mid + kPi));
    Vec2 delta = top.anchor - bot.anchor;
    if (normSq(delta) == 0.0) continue;
    double station = std::atan2(delta.y, delta.x);
    // Lift the stationary direction into (a, b) if possible.
    double s = station;
    while (s < a) s += kPi;
    while (s >= b) s -= kPi;
    if (s > a && s < b) {
      double v = eval(s);
      if (v < best) {
        best = v;
        best_dir = s;
      }
    }
  }

  // Ternary polish on the bracketing interval around the best direction.
  double lo = best_dir, hi = best_dir;
  for (std::size_t i = 0; i < m; ++i) {
    double a = dirs[i];
    double b = (i + 1 < m) ? dirs[i + 1] : dirs[0] + kPi;
    double bd = best_dir;
    while (bd < a) bd += kPi;
    while (bd > b) bd -= kPi;
    if (bd >= a && bd <= b) {
      lo = a;
      hi = b;
      break;
    }
  }
  if (m == 1) {
    lo = best_dir - kPi / 2;
    hi = best_dir + kPi / 2;
  }
  int budget = 300;
  while (hi - lo > tol && budget-- > 0) {
    double t1 = lo + (hi - lo) / 3.0;
    double t2 = hi - (hi - lo) / 3.0;
    if (eval(t1) <= eval(t2))
      hi = t2;
    else
      lo = t1;
  }
  if (hi - lo > tol) fail(Errc::tolerance_not_reached, "width refinement budget exhausted");
  best = std::min(best, eval(0.5 * (lo + hi)));
  return best;
}

namespace {

struct ClipAccum {
  std::vector<ArcFeature> fs;
  void add(ArcFeature f) { fs.push_back(std::move(f)); }
};

// Splits one feature against the halfplane <x,n> <= c, appending the inside
// portions (by the given sign) in traversal order.
void split_feature(const ArcFeature& f, const LineCut& cut, double keep_sign, double eps,
                   ClipAccum& out) {
  Vec2 n = cut.normal.unit();
  auto sd = [&](Vec2 p) { return keep_sign * (dot(p, n) - cut.offset); };

  if (const ArcSeg* s = std::get_if<ArcSeg>(&f)) {
    double da = sd(s->a), db = sd(s->b);
    if (da <= eps && db <= eps) {
      out.add(*s);
      return;
    }
    if (da >= -eps && db >= -eps) return;
    double t = da / (da - db);
    Vec2 x = s->a + (s->b - s->a) * t;
    if (da < 0.0)
      out.add(ArcSeg{s->a, x});
    else
      out.add(ArcSeg{x, s->b});
    return;
  }

  const ArcArc& a = std::get<ArcArc>(f);
  // Crossings solve cos(t - theta_n) = (c - <n,center>)/r in the arc frame.
  double q = (cut.offset - dot(n, a.center)) / a.radius;
  std::vector<double> locals;
  if (std::abs(q) < 1.0) {
    double theta_n = std::atan2(n.y, n.x);
    double acq = std::acos(q);
    double ang_tol = std::max(1e-12, eps / a.radius);
    for (double phi : {theta_n - acq, theta_n + acq}) {
      double local = normalize_angle(phi - a.start);
      if (local > ang_tol && local < a.sweep - ang_tol) locals.push_back(local);
    }
    std::sort(locals.begin(), locals.end());
  }
  std::vector<double> bounds{0.0};
  for (double l : locals) bounds.push_back(l);
  bounds.push_back(a.sweep);
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    double lo = bounds[i], hi = bounds[i + 1];
    if (hi - lo <= 1e-14) continue;
    double midmid = a.start + 0.5 * (lo + hi);
    if (sd(a.point_at(midmid)) <= 0.0) out.add(ArcArc{a.center, a.radius, a.start + lo, hi - lo});
  }
}

ArcSegmentBody assemble_piece(std::vector<ArcFeature> fs, double scale, Vec2* chord_a,
                              Vec2* chord_b) {
  if (fs.empty()) fail(Errc::cut_misses_interior, "cut leaves an empty piece");
  const double pos_tol = 1e-7 * scale;
  // Exactly one junction should be open; close it with the cut chord.
  int gap = -1;
  int gaps = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    Vec2 e = feature_end(fs[i]);
    Vec2 s = feature_start(fs[(i + 1) % fs.size()]);
    if (dist(e, s) > pos_tol) {
      gap = static_cast<int>(i);
      ++gaps;
    }
  }
  if (gaps == 0) fail(Errc::cut_misses_interior, "cut does not cross the body");
  if (gaps > 1) fail(Errc::construction_failed, "clip produced a disconnected chain");
  Vec2 a = feature_end(fs[static_cast<std::size_t>(gap)]);
  Vec2 b = feature_start(fs[static_cast<std::size_t>(gap + 1) % fs.size()]);
  if (chord_a) *chord_a = a;
  if (chord_b) *chord_b = b;
  fs.insert(fs.begin() + gap + 1, ArcSeg{a, b});
  return ArcSegmentBody::from_features(std::move(fs));
}

}  // namespace

std::pair<ArcSegmentBody, ArcSegmentBody> clip(const ArcSegmentBody& body, const LineCut& cut) {
  const double eps = 1e-12 * body.scale();
  ClipAccum left, right;
  for (const ArcFeature& f : body.features()) {
    split_feature(f, cut, +1.0, eps, left);
    split_feature(f, cut, -1.0, eps, right);
  }
  if (left.fs.empty() || right.fs.empty())
    fail(Errc::cut_misses_interior, "cut line does not cross the interior");
  ArcSegmentBody lb = assemble_piece(std::move(left.fs), body.scale(), nullptr, nullptr);
  ArcSegmentBody rb = assemble_piece(std::move(right.fs), body.scale(), nullptr, nullptr);
  return {std::move(lb), std::move(rb)};
}

std::pair<Vec2, Vec2> cut_chord(const ArcSegmentBody& body, const LineCut& cut) {
  const double eps = 1e-12 * body.scale();
  ClipAccum left;
  for (const ArcFeature& f : body.features()) split_feature(f, cut, +1.0, eps, left);
  if (left.fs.empty()) fail(Errc::cut_misses_interior, "cut line does not cross the interior");
  Vec2 a, b;
  assemble_piece(std::move(left.fs), body.scale(), &a, &b);
  return {a, b};
}

}  // namespace convdiv
