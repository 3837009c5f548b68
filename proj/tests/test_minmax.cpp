#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/minmax.hpp"
#include "core/oracle.hpp"
#include "support/bodies.hpp"

using namespace convdiv;
using namespace testbodies;

TEST_CASE("minmax width solve") {
  SolveReport sq = minmax_width_solve(unit_square(), 4);
  CHECK(*sq.value == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(sq.division->cut_sequence().size() == 3);
  CHECK(sq.balanced);
  for (double v : sq.per_subset_values) CHECK(v == doctest::Approx(0.25).epsilon(1e-9));

  SolveReport tri = minmax_width_solve(equilateral_triangle(), 2);
  CHECK(*tri.value == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-12));

  CHECK_THROWS_AS(minmax_width_solve(unit_square(), 1), Error);
}

TEST_CASE("minmax width is exact and balanced on seeded polygons") {
  for (const ConvexPolygon& poly : random_polygons(6, 53)) {
    double w = width(poly).value;
    double prev = w;
    for (int n = 2; n <= 6; ++n) {
      SolveReport rep = minmax_width_solve(poly, n);
      CHECK(*rep.value == doctest::Approx(w / n).epsilon(1e-15));
      CHECK(*rep.value < prev);
      prev = *rep.value;
      for (double v : rep.per_subset_values)
        CHECK(v == doctest::Approx(w / n).epsilon(1e-9));
    }
  }
}

TEST_CASE("conway closed forms") {
  double r = 1.0 / (2.0 * std::sqrt(3.0));
  for (int n : {2, 3, 4, 5}) {
    SolveReport rep = conway_solve(equilateral_triangle(), n);
    CHECK(*rep.value == doctest::Approx(3.0 * r / (2 * n + 1)).epsilon(1e-9));
    CHECK(rep.balanced);
  }
  for (int n : {2, 3, 4, 5}) {
    SolveReport rep = conway_solve(unit_square(), n);
    CHECK(*rep.value == doctest::Approx(1.0 / (2 * n)).epsilon(1e-9));
  }
  // An inball touching only two boundary points pins the optimum to I/n.
  for (int n : {2, 3, 4}) {
    SolveReport rep = conway_solve(rect(3, 1), n);
    CHECK(*rep.value == doctest::Approx(0.5 / n).epsilon(1e-9));
  }
}

TEST_CASE("conway subsets share the optimal inradius") {
  SolveReport rep = conway_solve(regular_gon(6), 3);
  REQUIRE(rep.per_subset_values.size() == 3);
  for (double v : rep.per_subset_values) CHECK(v == doctest::Approx(*rep.value).epsilon(1e-8));

  for (const ConvexPolygon& poly : random_polygons(6, 207)) {
    double big_i = inradius(poly).value;
    double prev = big_i;
    for (int n : {2, 3, 4}) {
      SolveReport r = conway_solve(poly, n);
      CHECK(*r.value >= big_i / n - 1e-9 * big_i);
      CHECK(*r.value <= prev + 1e-12);
      prev = *r.value;
    }
  }
}

TEST_CASE("conway matches the brute oracle on the hexagon") {
  SolveReport rep = conway_solve(regular_gon(6), 2);
  OracleResult oracle =
      brute_2division(Body(regular_gon(6)), Magnitude::inradius, Objective::min_max,
                      SearchGrid(180, 96, 3));
  CHECK(*rep.value == doctest::Approx(oracle.value).epsilon(1e-6));
}

TEST_CASE("minmax diameter bounds") {
  // Unit square, n = 7.
  BoundsReport b = minmax_diameter_bounds(OrthogonalWidths{{1.0, 1.0}}, std::sqrt(2.0), 7);
  CHECK(b.upper == doctest::Approx(std::sqrt(13.0) / 6.0).epsilon(1e-15));
  REQUIRE(b.mesh_tuple.has_value());
  CHECK((*b.mesh_tuple)[0] == 2);
  CHECK((*b.mesh_tuple)[1] == 3);
  CHECK(b.lower == doctest::Approx(std::sqrt(2.0) / 7.0));
  CHECK(b.lower_strict);
  CHECK(b.lower < b.upper);

  // 1x10 rectangle, n = 5.
  BoundsReport r = minmax_diameter_bounds(OrthogonalWidths{{1.0, 10.0}}, std::sqrt(101.0), 5);
  CHECK(r.upper == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  CHECK((*r.mesh_tuple)[0] == 1);
  CHECK((*r.mesh_tuple)[1] == 5);
  CHECK(r.lower == doctest::Approx(std::sqrt(101.0) / 5.0));

  // n = 2 only admits (1,1) and (1,2).
  BoundsReport t = minmax_diameter_bounds(OrthogonalWidths{{1.0, 1.0}}, std::sqrt(2.0), 2);
  CHECK((*t.mesh_tuple)[0] == 1);
  CHECK((*t.mesh_tuple)[1] == 2);
  CHECK(t.upper == doctest::Approx(std::sqrt(1.25)));

  // Narrow rectangles approach the lower bound.
  BoundsReport wide = minmax_diameter_bounds(OrthogonalWidths{{1.0, 100.0}}, std::sqrt(10001.0), 5);
  CHECK(wide.upper / wide.lower < 1.05);
}

TEST_CASE("mesh divisions realize the bound") {
  DivisionTree mesh = minmax_diameter_mesh_division(unit_square(), {2, 3});
  CHECK(mesh.leaf_count() <= 6);
  for (std::size_t i = 0; i < mesh.leaf_count(); ++i)
    CHECK(measure(mesh.leaf(i), Magnitude::diameter) <=
          std::sqrt(13.0) / 6.0 + 1e-9);

  DivisionTree one = minmax_diameter_mesh_division(regular_gon(7), {1, 1});
  CHECK(one.leaf_count() == 1);

  // Grid on the bounding square of a fine disk: quarters stay within sqrt(2).
  DivisionTree disk = minmax_diameter_mesh_division(regular_gon(128), {2, 2});
  CHECK(disk.leaf_count() == 4);
  for (std::size_t i = 0; i < disk.leaf_count(); ++i)
    CHECK(measure(disk.leaf(i), Magnitude::diameter) <= std::sqrt(2.0) + 1e-6);
}

TEST_CASE("bang and kadets inequalities on random divisions") {
  for (const ConvexPolygon& poly : random_polygons(6, 701)) {
    double w = width(poly).value;
    double big_i = inradius(poly).value;
    for (unsigned seed = 1; seed <= 4; ++seed) {
      DivisionTree tree = random_division(Body(poly), 4, seed);
      double sw = 0.0, si = 0.0;
      for (std::size_t i = 0; i < tree.leaf_count(); ++i) {
        sw += measure(tree.leaf(i), Magnitude::width);
        si += measure(tree.leaf(i), Magnitude::inradius);
      }
      CHECK(sw >= w - 1e-9);
      CHECK(si >= big_i - 1e-9);
    }
  }
}
