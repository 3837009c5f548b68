#pragma once

#include <string>

#include "minmax.hpp"

namespace convdiv {

// Deterministic SVG: body outline, cut chords clipped to the region they
// split, shaded subsets, per-subset value annotations. Identical inputs
// produce identical bytes.
std::string render_svg(const ConvexPolygon& poly, const SolveReport& rep);

}  // namespace convdiv
