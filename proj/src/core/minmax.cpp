#include "minmax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "medial.hpp"

namespace convdiv {

SolveReport minmax_width_solve(const ConvexPolygon& poly, int n) {
  if (n < 2) fail(Errc::invalid_argument, "need n >= 2");
  WidthResult w = width(poly);
  double target = w.value / n;

  DivisionTree tree{Body(poly)};
  for (int i = 1; i < n; ++i) {
    double offset = w.slab.low + w.value * i / n;
    tree.split_leaf(tree.leaf_count() - 1, LineCut(w.slab.normal, offset));
  }

  SolveReport rep;
  rep.problem = "minmax";
  rep.magnitude = "width";
  rep.n = n;
  rep.value = target;
  rep.tolerance = 1e-9;
  rep.per_subset_values.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < tree.leaf_count(); ++i) {
    double lw = measure(tree.leaf(i), Magnitude::width);
    if (std::abs(lw - target) > 1e-9 * target)
      fail(Errc::verification_failed, "strip width deviates from the optimum");
    rep.per_subset_values.push_back(lw);
  }
  rep.balanced = true;
  rep.division = std::move(tree);
  return rep;
}

SolveReport conway_solve(const ConvexPolygon& poly, int n) {
  if (n < 2) fail(Errc::invalid_argument, "need n >= 2");
  const std::size_t sides = poly.size();

  double rho = std::numeric_limits<double>::infinity();
  int best_side = -1;
  for (std::size_t L = 0; L < sides; ++L) {
    std::optional<double> r = solve_side_equation(poly, static_cast<int>(L), n);
    if (r && *r < rho) {
      rho = *r;
      best_side = static_cast<int>(L);
    }
  }
  if (best_side < 0)
    fail(Errc::verification_failed, "no side equation has a root below the inradius");

  const double wc = width(poly).value;
  ArcSegmentBody rb = rounded_body(poly, rho);
  Direction u = Direction::of_vector(poly.edge_normal(static_cast<std::size_t>(best_side)));
  double w_global = width_arc(rb, 1e-12);
  double w_side = breadth(rb, u);
  if (std::abs(w_global - 2.0 * n * rho) > 1e-8 * wc ||
      std::abs(w_side - 2.0 * n * rho) > 1e-8 * wc)
    fail(Errc::verification_failed, "rounded-body width does not match 2*n*rho");

  double big_i = inradius(poly).value;
  if (rho < big_i / n - 1e-9 * big_i)
    fail(Errc::verification_failed, "optimum fell below inradius/n");

  double lo = -support(rb, u.reversed());
  DivisionTree tree{Body(poly)};
  for (int i = 1; i < n; ++i)
    tree.split_leaf(tree.leaf_count() - 1, LineCut(u, lo + 2.0 * rho * i));

  SolveReport rep;
  rep.problem = "minmax";
  rep.magnitude = "inradius";
  rep.n = n;
  rep.value = rho;
  rep.tolerance = 1e-8;
  for (std::size_t i = 0; i < tree.leaf_count(); ++i) {
    double li = measure(tree.leaf(i), Magnitude::inradius);
    if (std::abs(li - rho) > 1e-8 * rho)
      fail(Errc::verification_failed, "subset inradius deviates from the optimum");
    rep.per_subset_values.push_back(li);
  }
  rep.balanced = true;
  rep.division = std::move(tree);
  return rep;
}

namespace {

void enumerate_tuples(int d, int n, int pos, int lower, long long prod, std::vector<int>& cur,
                      const std::vector<double>& w, double& best, std::vector<int>& best_tuple) {
  if (pos == d) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += (w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)]) /
                                     (static_cast<double>(cur[static_cast<std::size_t>(i)]) *
                                      static_cast<double>(cur[static_cast<std::size_t>(i)]));
    double v = std::sqrt(s);
    if (v < best) {
      best = v;
      best_tuple = cur;
    }
    return;
  }
  for (int a = lower; prod * a <= n; ++a) {
    cur.push_back(a);
    enumerate_tuples(d, n, pos + 1, a, prod * a, cur, w, best, best_tuple);
    cur.pop_back();
  }
}

}  // namespace

BoundsReport minmax_diameter_bounds(const OrthogonalWidths& widths, double diam, int n) {
  if (n < 2) fail(Errc::invalid_argument, "need n >= 2");
  if (widths.w.empty()) fail(Errc::invalid_argument, "empty width vector");
  for (std::size_t i = 0; i < widths.w.size(); ++i) {
    if (!(widths.w[i] > 0.0)) fail(Errc::invalid_argument, "orthogonal widths must be positive");
    if (i > 0 && widths.w[i] < widths.w[i - 1] * (1.0 - 1e-12))
      fail(Errc::invalid_argument, "orthogonal widths must be nondecreasing");
  }
  if (diam < widths.w.back() * (1.0 - 1e-9))
    fail(Errc::invalid_argument, "diameter below the largest orthogonal width");

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_tuple, cur;
  enumerate_tuples(static_cast<int>(widths.w.size()), n, 0, 1, 1, cur, widths.w, best, best_tuple);

  BoundsReport rep;
  rep.lower = diam / n;
  rep.lower_strict = true;
  rep.upper = std::min(diam, best);
  rep.mesh_tuple = best_tuple;
  return rep;
}

DivisionTree minmax_diameter_mesh_division(const ConvexPolygon& poly, std::pair<int, int> tuple) {
  auto [a1, a2] = tuple;
  if (a1 < 1 || a2 < 1) fail(Errc::invalid_argument, "grid factors must be at least 1");
  BoundingFrame f = bounding_frame(poly);
  const double w1 = f.along_u.width();
  const double w2 = f.along_v.width();

  DivisionTree tree{Body(poly)};
  // Strips across the width direction first, then cells within each strip.
  for (int i = 1; i < a1; ++i)
    tree.split_leaf(tree.leaf_count() - 1, LineCut(f.u, f.along_u.low + w1 * i / a1));

  Direction v = f.along_v.normal;
  std::size_t strips = tree.leaf_count();
  for (std::size_t s = strips; s-- > 0;) {
    std::size_t pos = s;
    for (int j = 1; j < a2; ++j) {
      LineCut cut(v, f.along_v.low + w2 * j / a2);
      try {
        tree.split_leaf(pos, cut);
        ++pos;
      } catch (const Error& e) {
        if (e.code() != Errc::cut_misses_interior) throw;
      }
    }
  }

  double bound = std::hypot(w1 / a1, w2 / a2);
  for (std::size_t i = 0; i < tree.leaf_count(); ++i) {
    if (measure(tree.leaf(i), Magnitude::diameter) > bound + 1e-9 * poly.scale())
      fail(Errc::construction_failed, "grid cell exceeds the diameter bound");
  }
  return tree;
}

}  // namespace convdiv
