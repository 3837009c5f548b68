#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/maxmin.hpp"
#include "core/medial.hpp"
#include "core/oracle.hpp"
#include "support/bodies.hpp"

using namespace convdiv;
using namespace testbodies;

namespace {

LineCut line_between(Vec2 a, Vec2 b) {
  Direction n = Direction::of_vector(perp(normalized(b - a)));
  return LineCut(n, dot(a, n.unit()));
}

ArcSegmentBody side_of(const ArcSegmentBody& body, const LineCut& cut, Vec2 probe) {
  auto [l, r] = clip(body, cut);
  return cut.signed_distance(probe) <= 0.0 ? l : r;
}

void check_division_diameters(const ConvexPolygon& poly, int n) {
  DivisionTree tree = maxmin_diameter_division(poly, n);
  CHECK(tree.leaf_count() == static_cast<std::size_t>(n));
  double d = diameter_value(poly);
  for (std::size_t i = 0; i < tree.leaf_count(); ++i)
    CHECK(measure(tree.leaf(i), Magnitude::diameter) == doctest::Approx(d).epsilon(1e-7));
}

// Equilateral triangle with chosen sides pushed into the interior by small
// outward bumps; the sides stay the only diameter segments.
ConvexPolygon bumped_triangle(int bumps) {
  Vec2 p{0, 0}, q{1, 0}, r{0.5, std::sqrt(3.0) / 2.0};
  std::vector<Vec2> pts{p};
  if (bumps >= 1) pts.push_back({0.5, -0.1});
  pts.push_back(q);
  if (bumps >= 2) pts.push_back({0.8366, 0.4830});
  pts.push_back(r);
  if (bumps >= 3) pts.push_back({0.1634, 0.4830});
  return validate_polygon(pts);
}

}  // namespace

TEST_CASE("maxmin diameter value") {
  CHECK(maxmin_diameter_value(unit_square()) == doctest::Approx(std::sqrt(2.0)));
  CHECK(maxmin_diameter_value(equilateral_triangle()) == doctest::Approx(1.0));
  CHECK(maxmin_diameter_value(rect(3, 1)) == doctest::Approx(std::sqrt(10.0)));
}

TEST_CASE("diameter segment families") {
  // Equilateral triangle: single triangle-type family of the three sides.
  auto tri_sets = enumerate_diameter_segment_sets(equilateral_triangle());
  REQUIRE(tri_sets.size() == 1);
  CHECK(tri_sets[0].triangle_type);
  CHECK(tri_sets[0].interior_count == 0);
  CHECK(tri_sets[0].boundary_count == 3);
  CHECK(tri_sets[0].capacity() == 2);

  // 1x3 rectangle: one fan per diagonal.
  auto rect_sets = enumerate_diameter_segment_sets(rect(3, 1));
  REQUIRE(rect_sets.size() == 2);
  for (const auto& s : rect_sets) {
    CHECK_FALSE(s.triangle_type);
    CHECK(s.interior_count == 1);
    CHECK(s.boundary_count == 0);
    CHECK(s.capacity() == 2);
  }

  // Regular pentagon: a fan of two long diagonals at every vertex.
  auto penta_sets = enumerate_diameter_segment_sets(regular_gon(5));
  CHECK(penta_sets.size() == 5);
  for (const auto& s : penta_sets) {
    CHECK(s.interior_count == 2);
    CHECK(s.capacity() == 4);
  }
}

TEST_CASE("maxmin diameter feasibility") {
  DiameterFeasibility tri = maxmin_diameter_feasible(equilateral_triangle(), 3);
  CHECK_FALSE(tri.feasible);
  CHECK(tri.max_n == 2);
  CHECK(maxmin_diameter_feasible(equilateral_triangle(), 2).feasible);

  CHECK(maxmin_diameter_feasible(unit_square(), 2).feasible);
  CHECK_FALSE(maxmin_diameter_feasible(unit_square(), 3).feasible);
  CHECK_FALSE(maxmin_diameter_feasible(unit_square(), 4).feasible);

  // Monotone in n.
  for (const ConvexPolygon& poly : random_polygons(6, 811)) {
    DiameterFeasibility f = maxmin_diameter_feasible(poly, 2);
    for (int n = 2; n <= f.max_n; ++n) CHECK(maxmin_diameter_feasible(poly, n).feasible);
    CHECK_FALSE(maxmin_diameter_feasible(poly, f.max_n + 1).feasible);
  }
}

TEST_CASE("maxmin diameter divisions") {
  check_division_diameters(equilateral_triangle(), 2);
  check_division_diameters(rect(3, 1), 2);
  check_division_diameters(unit_square(), 2);
  for (int n : {2, 3, 4}) check_division_diameters(regular_gon(5), n);
  for (int n : {2, 3, 4}) check_division_diameters(regular_gon(9), n);
  CHECK_THROWS_AS(maxmin_diameter_division(equilateral_triangle(), 3), Error);
  CHECK_THROWS_AS(maxmin_diameter_division(regular_gon(64), 3), Error);
}

TEST_CASE("triangle-type divisions with interior sides") {
  for (int bumps : {1, 2, 3}) {
    ConvexPolygon poly = bumped_triangle(bumps);
    auto sets = enumerate_diameter_segment_sets(poly);
    bool found = false;
    for (const auto& s : sets)
      if (s.triangle_type && s.interior_count == bumps) found = true;
    CHECK(found);
    DiameterFeasibility f = maxmin_diameter_feasible(poly, 2);
    CHECK(f.max_n == 2 * bumps + (3 - bumps) - 1);
    for (int n = 2; n <= f.max_n; ++n) check_division_diameters(poly, n);
  }
}

TEST_CASE("fan with one boundary and one interior segment") {
  ConvexPolygon quad = validate_polygon(
      {{0, 0}, {1, 0}, {std::cos(kPi * 50 / 180), std::sin(kPi * 50 / 180)}, {0.254, 0.544}});
  CHECK(diameter_value(quad) == doctest::Approx(1.0));
  auto sets = enumerate_diameter_segment_sets(quad);
  bool found = false;
  for (const auto& s : sets)
    if (!s.triangle_type && s.interior_count == 1 && s.boundary_count == 1) found = true;
  CHECK(found);
  DiameterFeasibility f = maxmin_diameter_feasible(quad, 2);
  CHECK(f.max_n == 3);
  for (int n = 2; n <= 3; ++n) check_division_diameters(quad, n);
}

TEST_CASE("maxmin width bounds") {
  BoundsReport sq = maxmin_width_bounds(unit_square(), 2);
  CHECK(sq.lower == doctest::Approx(0.5));
  CHECK(sq.upper == doctest::Approx(std::sqrt(2.0) / 2.0));

  // A long rectangle at n = 6: the upper bound equals the width itself.
  BoundsReport r = maxmin_width_bounds(rect(10, 1), 6);
  CHECK(r.lower == doctest::Approx(1.0 / 6.0));
  CHECK(r.upper == doctest::Approx(1.0));

  // A fine disk: bounds collapse onto the radius.
  BoundsReport d = maxmin_width_bounds(regular_gon(256), 2);
  CHECK(d.lower == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(d.upper == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("maxmin width for two subsets") {
  SolveReport sq = maxmin_width_2_solve(Body(unit_square()));
  CHECK(*sq.value == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-6));
  CHECK(sq.balanced);

  SolveReport disk = maxmin_width_2_solve(Body(regular_gon(256)));
  CHECK(*disk.value == doctest::Approx(1.0).epsilon(1e-3));

  // The bisector division of a near-equilateral isosceles triangle is optimal.
  ConvexPolygon iso = isosceles_455();
  Vec2 a{0, 0}, b{4, 0}, c{2, std::sqrt(21.0)};
  Vec2 p = b + (c - b) * (4.0 / 9.0);
  ConvexPolygon t1 = validate_polygon({a, b, p});
  ConvexPolygon t2 = validate_polygon({a, p, c});
  double w1 = width(t1).value, w2 = width(t2).value;
  CHECK(w1 == doctest::Approx(w2).epsilon(1e-9));
  SolveReport rep = maxmin_width_2_solve(Body(iso));
  CHECK(*rep.value == doctest::Approx(w1).epsilon(1e-5));

  // Outputs stay balanced and inside the bounds.
  for (const ConvexPolygon& poly : random_polygons(6, 17)) {
    SolveReport r = maxmin_width_2_solve(Body(poly));
    BoundsReport bd = maxmin_width_bounds(poly, 2);
    CHECK(r.balanced);
    CHECK(*r.value >= bd.lower - 1e-6);
    CHECK(*r.value <= bd.upper + 1e-6);
  }
}

TEST_CASE("maxmin inradius bound") {
  CHECK(maxmin_inradius_bound(unit_square(), 2) == doctest::Approx(0.25));
  CHECK(maxmin_inradius_bound(equilateral_triangle(), 3) ==
        doctest::Approx(1.0 / (6.0 * std::sqrt(3.0))));
  CHECK(maxmin_inradius_bound(regular_gon(64), 2) == doctest::Approx(0.5).epsilon(1e-2));
}

TEST_CASE("maxmin inradius for two subsets") {
  // Disk: the fixed point sits at half the radius.
  SolveReport disk = maxmin_inradius_2_solve(regular_gon(128), 1e-4);
  CHECK(*disk.value == doctest::Approx(0.5).epsilon(1e-3));

  // Square: agrees with the brute-force search.
  SolveReport sq = maxmin_inradius_2_solve(unit_square(), 1e-5);
  OracleResult oracle = brute_2division(Body(unit_square()), Magnitude::inradius,
                                        Objective::max_min, SearchGrid(180, 96, 3));
  CHECK(*sq.value == doctest::Approx(oracle.value).epsilon(1e-4));

  for (const ConvexPolygon& poly : {unit_square(), regular_gon(7)}) {
    double big_i = inradius(poly).value;
    SolveReport rep = maxmin_inradius_2_solve(poly, 1e-4);
    double rho = *rep.value;
    CHECK(rho >= big_i / 2.0 - 1e-4 * big_i);
    CHECK(rho <= big_i * (1.0 + 1e-9));
    // Residual bracketing: the gap function changes sign around the root.
    ConvexSkeleton sk = ConvexSkeleton::compute(poly);
    MaxminWidthOptions wopt;
    wopt.tol = 1e-5;
    auto f = [&](double r) {
      return *maxmin_width_2_solve(Body(rounded_body(sk, std::min(r, big_i))), wopt).value -
             2.0 * r;
    };
    CHECK(f(rho - 2e-4 * big_i) > -1e-9);
    CHECK(f(std::min(rho + 2e-4 * big_i, big_i)) < 1e-9);
    for (double v : rep.per_subset_values) CHECK(v >= rho - 1e-4 * big_i);
  }
}

TEST_CASE("width of subsets of a fully rounded body") {
  // Trapezoid glued from three unit equilateral triangles, rounded by the
  // triangle inradius; divided along the inner triangle sides.
  double h = std::sqrt(3.0) / 2.0;
  ConvexPolygon trap = validate_polygon({{0, 0}, {2, 0}, {1.5, h}, {0.5, h}});
  double rho = 1.0 / (2.0 * std::sqrt(3.0));
  ArcSegmentBody body = rounded_body(trap, rho);

  LineCut cut1 = line_between({0.5, h}, {1, 0});
  LineCut cut2 = line_between({1, 0}, {1.5, h});
  ArcSegmentBody left = side_of(body, cut1, Vec2{0.25, 0.2});
  ArcSegmentBody rest = side_of(body, cut1, Vec2{1.5, 0.3});
  ArcSegmentBody mid = side_of(rest, cut2, Vec2{1.0, 0.5});
  ArcSegmentBody right = side_of(rest, cut2, Vec2{1.75, 0.2});

  // The outer subsets meet the two-subset width identity; the middle one
  // breaks it, so the identity does not extend to three subsets.
  CHECK(width_arc(left) == doctest::Approx(2.0 * rho).epsilon(1e-6));
  CHECK(width_arc(right) == doctest::Approx(2.0 * rho).epsilon(1e-6));
  CHECK(width_arc(mid) > 2.0 * rho * 1.05);
}
