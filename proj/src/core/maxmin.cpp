#include "maxmin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "medial.hpp"

namespace convdiv {

double maxmin_diameter_value(const ConvexPolygon& poly) { return diameter_value(poly); }

namespace {

bool is_polygon_edge(const ConvexPolygon& poly, int i, int j) {
  int n = static_cast<int>(poly.size());
  return (j - i + n) % n == 1 || (i - j + n) % n == 1;
}

LineCut line_through(Vec2 a, Vec2 b) {
  Vec2 d = normalized(b - a);
  Direction normal = Direction::of_vector(perp(d));
  return LineCut(normal, dot(a, normal.unit()));
}

}  // namespace

std::vector<DiameterSegmentSet> enumerate_diameter_segment_sets(const ConvexPolygon& poly) {
  DiameterResult dr = diameter(poly);
  const int n = static_cast<int>(poly.size());

  std::vector<DiameterSegment> segs;
  segs.reserve(dr.pairs.size());
  for (auto [i, j] : dr.pairs) segs.push_back({i, j, is_polygon_edge(poly, i, j)});

  // Fan candidates: all segments incident to one vertex.
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < segs.size(); ++s) {
    incident[static_cast<std::size_t>(segs[s].v0)].push_back(static_cast<int>(s));
    incident[static_cast<std::size_t>(segs[s].v1)].push_back(static_cast<int>(s));
  }

  std::vector<DiameterSegmentSet> sets;
  std::set<std::vector<int>> seen;
  for (int v = 0; v < n; ++v) {
    const auto& inc = incident[static_cast<std::size_t>(v)];
    if (inc.empty()) continue;
    std::vector<int> key = inc;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) continue;
    DiameterSegmentSet set;
    set.shared_vertex = v;
    for (int s : key) {
      set.segments.push_back(segs[static_cast<std::size_t>(s)]);
      if (segs[static_cast<std::size_t>(s)].boundary)
        ++set.boundary_count;
      else
        ++set.interior_count;
    }
    sets.push_back(std::move(set));
  }

  // Triangle candidates: three diameter segments pairwise sharing endpoints.
  std::set<std::pair<int, int>> pair_set;
  for (const DiameterSegment& s : segs)
    pair_set.insert({std::min(s.v0, s.v1), std::max(s.v0, s.v1)});
  auto has = [&](int a, int b) {
    return pair_set.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  std::set<std::vector<int>> tri_seen;
  for (const DiameterSegment& s : segs) {
    for (int r = 0; r < n; ++r) {
      if (r == s.v0 || r == s.v1) continue;
      if (!has(s.v0, r) || !has(s.v1, r)) continue;
      std::vector<int> key{s.v0, s.v1, r};
      std::sort(key.begin(), key.end());
      if (!tri_seen.insert(key).second) continue;
      DiameterSegmentSet set;
      set.triangle_type = true;
      int vs[3][2] = {{key[0], key[1]}, {key[1], key[2]}, {key[0], key[2]}};
      for (auto& e : vs) {
        DiameterSegment ds{e[0], e[1], is_polygon_edge(poly, e[0], e[1])};
        set.segments.push_back(ds);
        if (ds.boundary)
          ++set.boundary_count;
        else
          ++set.interior_count;
      }
      sets.push_back(std::move(set));
    }
  }

  // Keep only maximal families.
  auto seg_keys = [](const DiameterSegmentSet& s) {
    std::set<std::pair<int, int>> ks;
    for (const DiameterSegment& d : s.segments)
      ks.insert({std::min(d.v0, d.v1), std::max(d.v0, d.v1)});
    return ks;
  };
  std::vector<DiameterSegmentSet> maximal;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto ki = seg_keys(sets[i]);
    bool contained = false;
    for (std::size_t j = 0; j < sets.size() && !contained; ++j) {
      if (i == j) continue;
      auto kj = seg_keys(sets[j]);
      if (ki.size() < kj.size() &&
          std::includes(kj.begin(), kj.end(), ki.begin(), ki.end()))
        contained = true;
      if (ki == kj && j < i) contained = true;  // duplicates keep the first
    }
    if (!contained) maximal.push_back(sets[i]);
  }
  return maximal;
}

DiameterFeasibility maxmin_diameter_feasible(const ConvexPolygon& poly, int n) {
  if (n < 2) fail(Errc::invalid_argument, "need n >= 2");
  DiameterFeasibility res;
  for (const DiameterSegmentSet& s : enumerate_diameter_segment_sets(poly)) {
    if (s.capacity() > res.max_n) {
      res.max_n = s.capacity();
      res.best_set = s;
    }
  }
  res.feasible = n <= res.max_n;
  return res;
}

namespace {

// Fan construction: all cuts pass through the shared endpoint, ordered by the
// angle of the segments around it. Cuts run along each interior segment's
// line plus one cut strictly between each consecutive pair of segments.
std::vector<LineCut> fan_cuts(const ConvexPolygon& poly, const DiameterSegmentSet& set, int n) {
  Vec2 p = poly.vertex(static_cast<std::size_t>(set.shared_vertex));

  struct Ray {
    double angle;
    bool boundary;
  };
  std::vector<Ray> rays;
  for (const DiameterSegment& s : set.segments) {
    int other = (s.v0 == set.shared_vertex) ? s.v1 : s.v0;
    Vec2 w = poly.vertex(static_cast<std::size_t>(other)) - p;
    rays.push_back({std::atan2(w.y, w.x), s.boundary});
  }
  // The rays span less than a half turn; lift them into one window.
  double ref = rays[0].angle;
  for (Ray& r : rays) {
    while (r.angle < ref - kPi) r.angle += kTwoPi;
    while (r.angle > ref + kPi) r.angle -= kTwoPi;
  }
  std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) { return a.angle < b.angle; });

  struct Item {
    double angle;
    bool between;  // true: cut between two segments; false: cut along a segment line
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (!rays[i].boundary) items.push_back({rays[i].angle, false});
    if (i + 1 < rays.size()) items.push_back({0.5 * (rays[i].angle + rays[i + 1].angle), true});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.angle < b.angle; });

  // Merge down to n subsets by omitting between-cuts first.
  int excess = static_cast<int>(items.size()) - (n - 1);
  for (int pass = 0; pass < 2 && excess > 0; ++pass) {
    bool target_between = (pass == 0);
    for (std::size_t i = items.size(); i-- > 0 && excess > 0;) {
      if (items[i].between == target_between) {
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(i));
        --excess;
      }
    }
  }

  std::vector<LineCut> cuts;
  for (const Item& it : items) {
    Vec2 dir{std::cos(it.angle), std::sin(it.angle)};
    Direction normal = Direction::of_vector(perp(dir));
    cuts.push_back(LineCut(normal, dot(p, normal.unit())));
  }
  return cuts;
}

// Triangle construction, one recipe per count of interior sides. Cuts are
// applied in order to the piece containing the remaining triangle material.
DivisionTree triangle_division(const ConvexPolygon& poly, const DiameterSegmentSet& set, int n) {
  std::vector<DiameterSegment> interior, boundary;
  for (const DiameterSegment& s : set.segments)
    (s.boundary ? boundary : interior).push_back(s);
  auto pt = [&](int v) { return poly.vertex(static_cast<std::size_t>(v)); };

  std::vector<LineCut> cuts;
  std::vector<Vec2> trackers;  // point identifying the side that keeps being divided
  const int a = static_cast<int>(interior.size());
  if (a == 0) {
    // Single cut through one triangle vertex and the opposite side midpoint.
    const DiameterSegment& s0 = set.segments[0];
    int r = -1;
    for (const DiameterSegment& s : set.segments) {
      if (s.v0 != s0.v0 && s.v0 != s0.v1) r = s.v0;
      if (s.v1 != s0.v0 && s.v1 != s0.v1) r = s.v1;
    }
    cuts.push_back(line_through(pt(r), (pt(s0.v0) + pt(s0.v1)) * 0.5));
    trackers.push_back(Vec2{});
  } else if (a == 1) {
    const DiameterSegment& in = interior[0];
    int r = -1;
    for (const DiameterSegment& s : boundary) {
      if (s.v0 != in.v0 && s.v0 != in.v1) r = s.v0;
      if (s.v1 != in.v0 && s.v1 != in.v1) r = s.v1;
    }
    cuts.push_back(line_through(pt(in.v0), pt(in.v1)));
    trackers.push_back(pt(r));
    cuts.push_back(line_through(pt(r), (pt(in.v0) + pt(in.v1)) * 0.5));
    trackers.push_back(Vec2{});
  } else if (a == 2) {
    // The two interior sides share a vertex p; the boundary side is qr.
    int p = -1, q = -1, r = -1;
    const DiameterSegment &s1 = interior[0], &s2 = interior[1];
    for (int v : {s1.v0, s1.v1})
      if (v == s2.v0 || v == s2.v1) p = v;
    q = (s1.v0 == p) ? s1.v1 : s1.v0;
    r = (s2.v0 == p) ? s2.v1 : s2.v0;
    cuts.push_back(line_through(pt(p), pt(q)));
    trackers.push_back(pt(r));
    cuts.push_back(line_through(pt(p), pt(r)));
    trackers.push_back(pt(q));
    cuts.push_back(line_through(pt(p), (pt(q) + pt(r)) * 0.5));
    trackers.push_back(Vec2{});
  } else {
    // All three interior: peel the three side lines, then split the inner
    // triangle through a vertex.
    int v0 = interior[0].v0, v1 = interior[0].v1;
    int v2 = -1;
    for (int v : {interior[1].v0, interior[1].v1})
      if (v != v0 && v != v1) v2 = v;
    Vec2 c = (pt(v0) + pt(v1) + pt(v2)) * (1.0 / 3.0);
    cuts.push_back(line_through(pt(v0), pt(v1)));
    trackers.push_back(c);
    cuts.push_back(line_through(pt(v1), pt(v2)));
    trackers.push_back(c);
    cuts.push_back(line_through(pt(v2), pt(v0)));
    trackers.push_back(c);
    cuts.push_back(line_through(pt(v2), (pt(v0) + pt(v1)) * 0.5));
    trackers.push_back(Vec2{});
  }

  if (static_cast<int>(cuts.size()) > n - 1) {
    cuts.erase(cuts.begin() + (n - 1), cuts.end());
    trackers.erase(trackers.begin() + (n - 1), trackers.end());
  }

  DivisionTree tree{Body(poly)};
  std::size_t target = 0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    double side = cuts[i].signed_distance(trackers[i]);
    tree.split_leaf(target, cuts[i]);
    if (i + 1 < cuts.size()) target = (side <= 0.0) ? target : target + 1;
  }
  return tree;
}

}  // namespace

DivisionTree maxmin_diameter_division(const ConvexPolygon& poly, int n) {
  DiameterFeasibility feas = maxmin_diameter_feasible(poly, n);
  if (!feas.feasible)
    fail(Errc::infeasible_n, "no diameter segment family supports " + std::to_string(n) +
                                 " subsets (max " + std::to_string(feas.max_n) + ")");

  // Prefer the highest-capacity family; any family with capacity >= n works.
  DivisionTree tree = [&] {
    if (feas.best_set.triangle_type) return triangle_division(poly, feas.best_set, n);
    std::vector<LineCut> cuts = fan_cuts(poly, feas.best_set, n);
    DivisionTree t{Body(poly)};
    // Ascending cut angles peel wedges off below each cut; the remainder is
    // always the rightmost leaf.
    for (const LineCut& c : cuts) t.split_leaf(t.leaf_count() - 1, c);
    return t;
  }();

  double d_total = diameter_value(poly);
  for (std::size_t i = 0; i < tree.leaf_count(); ++i) {
    double d = measure(tree.leaf(i), Magnitude::diameter);
    if (std::abs(d - d_total) > 1e-7 * d_total)
      fail(Errc::construction_failed, "division subset misses the full diameter");
  }
  return tree;
}

BoundsReport maxmin_width_bounds(const ConvexPolygon& poly, int n) {
  if (n < 2) fail(Errc::invalid_argument, "need n >= 2");
  BoundsReport rep;
  rep.lower = width(poly).value / n;
  rep.lower_strict = false;
  rep.upper = std::min(width(poly).value, diameter_value(poly) / 2.0);
  return rep;
}

SolveReport maxmin_width_2_solve(const Body& body, const MaxminWidthOptions& opt) {
  const double total = measure(body, Magnitude::width, 1e-12);
  const double btol = std::max(0.1 * opt.tol, 1e-12);

  struct Eval {
    double value = -std::numeric_limits<double>::infinity();
    double wl = 0, wr = 0;
    std::optional<LineCut> cut;
  };
  auto eval_phi = [&](double phi) {
    Eval e;
    try {
      LineCut cut = balanced_cut(body, Direction(phi), Magnitude::width, btol);
      auto [l, r] = clip_body(body, cut);
      e.wl = measure(l, Magnitude::width, 0.1 * btol);
      e.wr = measure(r, Magnitude::width, 0.1 * btol);
      e.value = std::min(e.wl, e.wr);
      e.cut = cut;
    } catch (const Error&) {
    }
    return e;
  };

  Eval best;
  double best_phi = 0.0;
  for (int i = 0; i < opt.n_phi; ++i) {
    double phi = kPi * i / opt.n_phi;
    Eval e = eval_phi(phi);
    if (e.value > best.value) {
      best = e;
      best_phi = phi;
    }
  }
  if (!best.cut) fail(Errc::tolerance_not_reached, "no direction admitted a balanced cut");

  // Golden refinement around the best grid direction.
  double lo = best_phi - kPi / opt.n_phi;
  double hi = best_phi + kPi / opt.n_phi;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  Eval e1 = eval_phi(x1), e2 = eval_phi(x2);
  int guard = 200;
  while (hi - lo > opt.refine && guard-- > 0) {
    if (e1.value >= e2.value) {
      hi = x2;
      x2 = x1;
      e2 = e1;
      x1 = hi - gr * (hi - lo);
      e1 = eval_phi(x1);
    } else {
      lo = x1;
      x1 = x2;
      e1 = e2;
      x2 = lo + gr * (hi - lo);
      e2 = eval_phi(x2);
    }
    const Eval& cand = (e1.value >= e2.value) ? e1 : e2;
    if (cand.value > best.value) best = cand;
  }

  SolveReport rep;
  rep.problem = "maxmin";
  rep.magnitude = "width";
  rep.n = 2;
  rep.value = best.value;
  rep.tolerance = opt.tol;
  rep.per_subset_values = {best.wl, best.wr};
  rep.balanced = std::abs(best.wl - best.wr) <= opt.tol * total;
  DivisionTree tree{body};
  tree.split_leaf(0, *best.cut);
  rep.division = std::move(tree);
  return rep;
}

double maxmin_inradius_bound(const ConvexPolygon& poly, int n) {
  if (n < 2) fail(Errc::invalid_argument, "need n >= 2");
  return inradius(poly).value / n;
}

SolveReport maxmin_inradius_2_solve(const ConvexPolygon& poly, double tol) {
  const double big_i = inradius(poly).value;
  ConvexSkeleton sk = ConvexSkeleton::compute(poly);

  MaxminWidthOptions wopt;
  wopt.tol = 0.1 * tol;  // keep the bisection sign tests reliable
  auto f = [&](double rho) {
    ArcSegmentBody rb = rounded_body(sk, rho);
    return *maxmin_width_2_solve(Body(std::move(rb)), wopt).value;
  };

  double lo = 1e-6 * big_i, hi = big_i;
  double rho = 0.5 * (lo + hi);
  bool converged = false;
  for (int it = 0; it < 200; ++it) {
    rho = 0.5 * (lo + hi);
    double g = f(rho) - 2.0 * rho;
    if (std::abs(g) <= tol * big_i) {
      converged = true;
      break;
    }
    if (g > 0.0)
      lo = rho;
    else
      hi = rho;
    if (hi - lo <= 1e-15 * big_i) break;
  }
  if (!converged) fail(Errc::tolerance_not_reached, "fixed-point residual did not converge");
  if (rho < big_i / 2.0 - tol * big_i || rho > big_i * (1.0 + 1e-9))
    fail(Errc::verification_failed, "fixed point escaped [inradius/2, inradius]");

  SolveReport inner = maxmin_width_2_solve(Body(rounded_body(sk, rho)), wopt);
  LineCut cut = inner.division->cut_sequence().front().cut;

  SolveReport rep;
  rep.problem = "maxmin";
  rep.magnitude = "inradius";
  rep.n = 2;
  rep.value = rho;
  rep.tolerance = tol;
  DivisionTree tree{Body(poly)};
  tree.split_leaf(0, cut);
  for (std::size_t i = 0; i < tree.leaf_count(); ++i) {
    double li = measure(tree.leaf(i), Magnitude::inradius);
    if (li < rho - tol * big_i)
      fail(Errc::verification_failed, "subset inradius fell below the fixed point");
    rep.per_subset_values.push_back(li);
  }
  rep.balanced =
      std::abs(rep.per_subset_values[0] - rep.per_subset_values[1]) <= 2.0 * tol * big_i;
  rep.division = std::move(tree);
  return rep;
}

}  // namespace convdiv
