#pragma once

#include "division.hpp"

namespace convdiv {

struct SearchGrid {
  int angle_samples = 360;
  int offset_samples = 200;
  int refine_rounds = 3;
  unsigned long long seed = 0;

  SearchGrid() = default;
  SearchGrid(int a, int o, int r, unsigned long long s = 0)
      : angle_samples(a), offset_samples(o), refine_rounds(r), seed(s) {}
};

enum class Objective { min_max, max_min };

Objective objective_from_string(const std::string& s);

struct OracleResult {
  double value;
  LineCut cut;
};

// Exhaustive scan over cut angle x offset with local refinement. Deliberately
// independent of the solvers; shares only the base geometry.
OracleResult brute_2division(const Body& body, Magnitude m, Objective obj,
                             const SearchGrid& grid = {});

// Scan over the first cut, then over the second cut of either piece.
double brute_3division(const Body& body, Magnitude m, Objective obj, const SearchGrid& grid = {});

// n-1 random valid successive cuts, deterministic per seed.
DivisionTree random_division(const Body& body, int n, unsigned long long seed);

// Seeded polygon with the requested number of sides, vertices on the unit
// circle.
ConvexPolygon random_convex_polygon(int sides, unsigned long long seed);

}  // namespace convdiv
