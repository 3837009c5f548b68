#pragma once

#include <string>
#include <vector>

#include "minmax.hpp"

namespace convdiv {

// Serialization keeps 17 significant digits so numbers round-trip exactly.
std::string report_to_json(const SolveReport& rep);
SolveReport report_from_json(const std::string& text);

// Cut records of a report, whether it carries a live division or parsed cuts.
std::vector<DivisionTree::CutRecord> report_cuts(const SolveReport& rep);

// Replays the cut list on the body and recomputes every subset's magnitude.
std::vector<double> replay_report(const ConvexPolygon& poly, const SolveReport& rep);

ConvexPolygon polygon_from_json(const std::string& text, std::string* name = nullptr);
std::string polygon_to_json(const ConvexPolygon& poly, const std::string& name);

std::string format_double(double v);  // %.17g

}  // namespace convdiv
