#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace convdiv {

Objective objective_from_string(const std::string& s) {
  if (s == "minmax" || s == "minMax") return Objective::min_max;
  if (s == "maxmin" || s == "maxMin") return Objective::max_min;
  fail(Errc::invalid_argument, "unknown objective: " + s);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double worst_value(Objective obj) { return obj == Objective::min_max ? kInf : -kInf; }
bool better(Objective obj, double a, double b) {
  return obj == Objective::min_max ? a < b : a > b;
}
double combine(Objective obj, double a, double b) {
  return obj == Objective::min_max ? std::max(a, b) : std::min(a, b);
}

double eval_cut(const Body& body, Magnitude m, Objective obj, const Direction& u, double t) {
  try {
    auto [l, r] = clip_body(body, LineCut(u, t));
    return combine(obj, measure(l, m, 1e-9), measure(r, m, 1e-9));
  } catch (const Error&) {
    return worst_value(obj);
  }
}

std::pair<double, double> extent(const Body& body, const Direction& u) {
  return {-support(body, u.reversed()), support(body, u)};
}

// Golden-section optimum of the cut offset at a fixed direction. The offset
// objective combines one nondecreasing and one nonincreasing response to
// parallel translation, so it is unimodal.
double golden_offset(const Body& body, Magnitude m, Objective obj, const Direction& u, int iters,
                     double* best_t = nullptr) {
  auto [lo, hi] = extent(body, u);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double span = hi - lo;
  double a = lo + 1e-6 * span, b = hi - 1e-6 * span;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = eval_cut(body, m, obj, u, x1), f2 = eval_cut(body, m, obj, u, x2);
  for (int i = 0; i < iters; ++i) {
    bool keep_left = obj == Objective::min_max ? (f1 <= f2) : (f1 >= f2);
    if (keep_left) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = eval_cut(body, m, obj, u, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = eval_cut(body, m, obj, u, x2);
    }
  }
  bool left = obj == Objective::min_max ? (f1 <= f2) : (f1 >= f2);
  if (best_t) *best_t = left ? x1 : x2;
  return left ? f1 : f2;
}

double fold_pi(double a) {
  double r = normalize_angle(a);
  if (r >= kPi) r -= kPi;
  return r;
}

// Edge-normal angles of a polygon body (empty for arc chains). Optimal slabs
// of convex polygons are edge-supported, so these enrich the scan.
std::vector<double> edge_normal_angles(const Body& body) {
  std::vector<double> out;
  if (const ConvexPolygon* p = std::get_if<ConvexPolygon>(&body)) {
    out.reserve(p->size());
    for (std::size_t i = 0; i < p->size(); ++i) {
      Vec2 n = p->edge_normal(i);
      out.push_back(fold_pi(std::atan2(n.y, n.x)));
    }
  }
  return out;
}

// Generic one-dimensional golden refinement over the direction.
template <typename F>
double golden_direction(F&& value_at, Objective obj, double lo, double hi, int iters,
                        double* best_dir = nullptr) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = value_at(x1), f2 = value_at(x2);
  double best = worst_value(obj);
  double bd = x1;
  auto consider = [&](double v, double d) {
    if (better(obj, v, best)) {
      best = v;
      bd = d;
    }
  };
  consider(f1, x1);
  consider(f2, x2);
  for (int i = 0; i < iters; ++i) {
    bool keep_left = obj == Objective::min_max ? (f1 <= f2) : (f1 >= f2);
    if (keep_left) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = value_at(x1);
      consider(f1, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = value_at(x2);
      consider(f2, x2);
    }
  }
  if (best_dir) *best_dir = bd;
  return best;
}

}  // namespace

OracleResult brute_2division(const Body& body, Magnitude m, Objective obj, const SearchGrid& grid) {
  const int A = std::max(grid.angle_samples, 2);
  const int O = std::max(grid.offset_samples, 2);

  double best = worst_value(obj);
  double best_theta = 0.0, best_t = 0.0, best_dt = 0.0;
  auto consider = [&](double v, double theta, double t, double dt) {
    if (better(obj, v, best)) {
      best = v;
      best_theta = theta;
      best_t = t;
      best_dt = dt;
    }
  };

  // Stage 1: the full angle x offset lattice.
  for (int i = 0; i < A; ++i) {
    double theta = kPi * i / A;
    Direction u(theta);
    auto [lo, hi] = extent(body, u);
    double dt = (hi - lo) / O;
    for (int j = 1; j < O; ++j) consider(eval_cut(body, m, obj, u, lo + dt * j), theta, lo + dt * j, dt);
  }

  // Stage 2: zoom rounds around the best lattice cell.
  double dtheta = kPi / A;
  double dt = best_dt;
  for (int round = 0; round < grid.refine_rounds; ++round) {
    const int S = 7;
    double t0 = best_theta, c0 = best_t;
    for (int i = -S; i <= S; ++i)
      for (int j = -S; j <= S; ++j)
        consider(eval_cut(body, m, obj, Direction(t0 + dtheta * i / S), c0 + dt * j / S),
                 t0 + dtheta * i / S, c0 + dt * j / S, dt / S);
    dtheta /= S;
    dt /= S;
  }

  // Stage 3: per-direction offset optima along edge normals and the best cell.
  for (double theta : edge_normal_angles(body)) {
    double t = 0.0;
    double v = golden_offset(body, m, obj, Direction(theta), 48, &t);
    consider(v, theta, t, 0.0);
  }

  // Stage 4: golden refinement of the direction around the incumbent.
  auto dir_value = [&](double theta) {
    return golden_offset(body, m, obj, Direction(theta), 48);
  };
  for (double window : {kPi / A, 16.0 * dtheta}) {
    double bd = best_theta;
    double v = golden_direction(dir_value, obj, best_theta - window, best_theta + window, 36, &bd);
    if (better(obj, v, best)) {
      double t = 0.0;
      v = golden_offset(body, m, obj, Direction(bd), 60, &t);
      consider(v, bd, t, 0.0);
    }
  }
  {
    double t = 0.0;
    double v = golden_offset(body, m, obj, Direction(best_theta), 60, &t);
    consider(v, best_theta, t, 0.0);
  }
  return OracleResult{best, LineCut(Direction(best_theta), best_t)};
}

namespace {

// Best 2-division of one piece: edge normals plus a uniform grid, golden
// offsets per direction, golden polish over the direction.
double inner_best2(const Body& piece, Magnitude m, Objective obj, int grid_dirs, int offset_iters,
                   int polish_iters) {
  double best = worst_value(obj);
  double best_theta = 0.0;
  double spacing = kPi / std::max(grid_dirs, 1);
  auto consider = [&](double v, double theta) {
    if (better(obj, v, best)) {
      best = v;
      best_theta = theta;
    }
  };
  for (double theta : edge_normal_angles(piece))
    consider(golden_offset(piece, m, obj, Direction(theta), offset_iters), theta);
  for (int i = 0; i < grid_dirs; ++i) {
    double theta = kPi * i / grid_dirs;
    consider(golden_offset(piece, m, obj, Direction(theta), offset_iters), theta);
  }
  if (polish_iters > 0) {
    auto dir_value = [&](double theta) {
      return golden_offset(piece, m, obj, Direction(theta), offset_iters);
    };
    double bd = best_theta;
    double v = golden_direction(dir_value, obj, best_theta - spacing, best_theta + spacing,
                                polish_iters, &bd);
    consider(v, bd);
  }
  return best;
}

struct InnerLevel {
  int grid_dirs;
  int offset_iters;
  int polish_iters;
};

}  // namespace

double brute_3division(const Body& body, Magnitude m, Objective obj, const SearchGrid& grid) {
  const int A = std::max(grid.angle_samples, 2);
  const InnerLevel light{4, 14, 8};
  const InnerLevel full{10, 32, 16};

  double best = worst_value(obj);

  // Contribution of one first cut when the given piece is divided again.
  auto branch_eval = [&](const Direction& u, double t, int choice, const InnerLevel& lv) {
    try {
      auto [l, r] = clip_body(body, LineCut(u, t));
      const Body& again = choice == 0 ? l : r;
      const Body& other = choice == 0 ? r : l;
      return combine(obj, measure(other, m, 1e-9),
                     inner_best2(again, m, obj, lv.grid_dirs, lv.offset_iters, lv.polish_iters));
    } catch (const Error&) {
      return worst_value(obj);
    }
  };
  auto branch_opt = [&](double theta, int choice, const InnerLevel& lv, int iters) {
    Direction u(theta);
    auto [lo, hi] = extent(body, u);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double span = hi - lo;
    double a = lo + 1e-6 * span, b = hi - 1e-6 * span;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = branch_eval(u, x1, choice, lv), f2 = branch_eval(u, x2, choice, lv);
    double bb = worst_value(obj);
    for (int i = 0; i < iters; ++i) {
      bool keep_left = obj == Objective::min_max ? (f1 <= f2) : (f1 >= f2);
      if (keep_left) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = branch_eval(u, x1, choice, lv);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = branch_eval(u, x2, choice, lv);
      }
      double cand = obj == Objective::min_max ? std::min(f1, f2) : std::max(f1, f2);
      if (better(obj, cand, bb)) bb = cand;
    }
    return bb;
  };

  // Stage 1: rank (direction, branch) pairs with a light inner search.
  std::vector<double> dirs = edge_normal_angles(body);
  for (int i = 0; i < A; ++i) dirs.push_back(kPi * i / A);
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             dirs.end());

  struct Cand {
    double value;
    double theta;
    int choice;
  };
  std::vector<Cand> cands;
  for (double theta : dirs)
    for (int choice : {0, 1})
      cands.push_back({branch_opt(theta, choice, light, 10), theta, choice});
  std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
    return better(obj, a.value, b.value);
  });
  for (const Cand& c : cands)
    if (better(obj, c.value, best)) best = c.value;

  // Stage 2: re-optimize the leaders with the full inner search.
  std::size_t keep = std::min<std::size_t>(3, cands.size());
  for (std::size_t i = 0; i < keep; ++i) {
    double v = branch_opt(cands[i].theta, cands[i].choice, full, 26);
    if (better(obj, v, best)) best = v;
    // Direction refinement around each leader.
    auto dir_value = [&](double theta) { return branch_opt(theta, cands[i].choice, light, 12); };
    double bd = cands[i].theta;
    golden_direction(dir_value, obj, cands[i].theta - kPi / A, cands[i].theta + kPi / A,
                     std::max(8, grid.refine_rounds * 4), &bd);
    double vv = branch_opt(bd, cands[i].choice, full, 26);
    if (better(obj, vv, best)) best = vv;
  }
  return best;
}

namespace {

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

DivisionTree random_division(const Body& body, int n, unsigned long long seed) {
  if (n < 2) fail(Errc::invalid_argument, "need n >= 2");
  std::mt19937_64 rng(seed);
  DivisionTree tree{body};
  while (tree.leaf_count() < static_cast<std::size_t>(n)) {
    bool done = false;
    for (int attempt = 0; attempt < 64 && !done; ++attempt) {
      std::size_t leaf = static_cast<std::size_t>(u01(rng) * static_cast<double>(tree.leaf_count()));
      leaf = std::min(leaf, tree.leaf_count() - 1);
      Direction u(u01(rng) * kPi);
      auto [lo, hi] = extent(tree.leaf(leaf), u);
      double span = hi - lo;
      double t = lo + span * (0.15 + 0.7 * u01(rng));
      try {
        tree.split_leaf(leaf, LineCut(u, t));
        done = true;
      } catch (const Error&) {
      }
    }
    if (!done) fail(Errc::construction_failed, "random division could not place a cut");
  }
  return tree;
}

ConvexPolygon random_convex_polygon(int sides, unsigned long long seed) {
  if (sides < 3) fail(Errc::invalid_argument, "need at least 3 sides");
  std::mt19937_64 rng(seed);
  // Random angular gaps with a floor, scaled to a full turn: spread varies
  // but slivers are kept out.
  std::vector<double> gaps(static_cast<std::size_t>(sides));
  double total = 0.0;
  for (double& g : gaps) {
    g = 0.25 + u01(rng);
    total += g;
  }
  double phase = u01(rng) * kTwoPi;
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(sides));
  double acc = 0.0;
  for (int i = 0; i < sides; ++i) {
    double a = phase + kTwoPi * acc / total;
    pts.emplace_back(std::cos(a), std::sin(a));
    acc += gaps[static_cast<std::size_t>(i)];
  }
  return validate_polygon(pts);
}

}  // namespace convdiv
