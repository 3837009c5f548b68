#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/division.hpp"
#include "core/oracle.hpp"
#include "support/bodies.hpp"

using namespace convdiv;
using namespace testbodies;

TEST_CASE("division tree bookkeeping") {
  DivisionTree tree{Body(unit_square())};
  CHECK(tree.leaf_count() == 1);
  tree.split_leaf(0, LineCut(Direction(0.0), 0.5));
  tree.split_leaf(1, LineCut(Direction(kPi / 2), 0.5));
  CHECK(tree.leaf_count() == 3);
  CHECK(tree.cut_sequence().size() == 2);

  double area = 0.0;
  for (std::size_t i = 0; i < tree.leaf_count(); ++i)
    area += std::get<ConvexPolygon>(tree.leaf(i)).area();
  CHECK(area == doctest::Approx(1.0).epsilon(1e-12));

  DivisionTree again = replay_division(Body(unit_square()), tree.cut_sequence());
  CHECK(again.leaf_count() == 3);
  for (std::size_t i = 0; i < tree.leaf_count(); ++i) {
    CHECK(std::get<ConvexPolygon>(again.leaf(i)).area() ==
          doctest::Approx(std::get<ConvexPolygon>(tree.leaf(i)).area()));
  }
}

TEST_CASE("balanced cuts") {
  // Symmetric cases land on the midline.
  LineCut c1 = balanced_cut(Body(unit_square()), Direction(0.0), Magnitude::width, 1e-9);
  CHECK(c1.offset == doctest::Approx(0.5).epsilon(1e-6));
  auto [l1, r1] = clip_body(Body(unit_square()), c1);
  CHECK(measure(l1, Magnitude::width) == doctest::Approx(0.5).epsilon(1e-6));

  LineCut c2 = balanced_cut(Body(rect(3, 1)), Direction(0.0), Magnitude::diameter, 1e-9);
  auto [l2, r2] = clip_body(Body(rect(3, 1)), c2);
  CHECK(measure(l2, Magnitude::diameter) ==
        doctest::Approx(std::hypot(1.5, 1.0)).epsilon(1e-6));
  CHECK(measure(l2, Magnitude::diameter) ==
        doctest::Approx(measure(r2, Magnitude::diameter)).epsilon(1e-6));

  // A seeded quadrilateral balances the inradius within tolerance.
  ConvexPolygon quad = random_convex_polygon(4, 12345);
  double total = measure(Body(quad), Magnitude::inradius);
  LineCut c3 = balanced_cut(Body(quad), Direction(1.1), Magnitude::inradius, 1e-7);
  auto [l3, r3] = clip_body(Body(quad), c3);
  CHECK(std::abs(measure(l3, Magnitude::inradius) - measure(r3, Magnitude::inradius)) <=
        1e-7 * total);
}

TEST_CASE("random divisions partition the body") {
  for (int seed = 1; seed <= 5; ++seed) {
    DivisionTree tree = random_division(Body(unit_square()), 5, static_cast<unsigned>(seed));
    CHECK(tree.leaf_count() == 5);
    double area = 0.0;
    for (std::size_t i = 0; i < tree.leaf_count(); ++i) {
      const ConvexPolygon& leaf = std::get<ConvexPolygon>(tree.leaf(i));
      CHECK(leaf.area() > 0.0);
      area += leaf.area();
    }
    CHECK(area == doctest::Approx(1.0).epsilon(1e-9));
  }

  // Determinism.
  DivisionTree a = random_division(Body(regular_gon(7)), 4, 99);
  DivisionTree b = random_division(Body(regular_gon(7)), 4, 99);
  REQUIRE(a.cut_sequence().size() == b.cut_sequence().size());
  for (std::size_t i = 0; i < a.cut_sequence().size(); ++i) {
    CHECK(a.cut_sequence()[i].cut.offset == b.cut_sequence()[i].cut.offset);
    CHECK(a.cut_sequence()[i].cut.normal.angle() == b.cut_sequence()[i].cut.normal.angle());
  }
}
