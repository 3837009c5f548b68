#include "report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace convdiv {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<DivisionTree::CutRecord> report_cuts(const SolveReport& rep) {
  if (rep.division) return rep.division->cut_sequence();
  return rep.cut_records;
}

namespace {

void write_bounds(std::ostringstream& out, const BoundsReport& b) {
  out << "{\"lower\": " << format_double(b.lower)
      << ", \"lowerStrict\": " << (b.lower_strict ? "true" : "false")
      << ", \"upper\": " << format_double(b.upper);
  if (b.mesh_tuple) {
    out << ", \"meshTuple\": [";
    for (std::size_t i = 0; i < b.mesh_tuple->size(); ++i) {
      if (i) out << ", ";
      out << (*b.mesh_tuple)[i];
    }
    out << "]";
  }
  out << "}";
}

}  // namespace

std::string report_to_json(const SolveReport& rep) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema\": 1,\n";
  out << "  \"problem\": \"" << rep.problem << "\",\n";
  out << "  \"magnitude\": \"" << rep.magnitude << "\",\n";
  out << "  \"n\": " << rep.n << ",\n";
  if (rep.value) out << "  \"value\": " << format_double(*rep.value) << ",\n";
  if (rep.bounds) {
    out << "  \"bounds\": ";
    write_bounds(out, *rep.bounds);
    out << ",\n";
  }
  if (rep.unsupported) out << "  \"unsupported\": \"" << *rep.unsupported << "\",\n";
  if (rep.feasibility) {
    out << "  \"feasibility\": {\"a\": " << rep.feasibility->a << ", \"b\": " << rep.feasibility->b
        << ", \"delta\": " << rep.feasibility->delta << ", \"maxN\": " << rep.feasibility->max_n
        << "},\n";
  }
  out << "  \"cuts\": [";
  std::vector<DivisionTree::CutRecord> cuts = report_cuts(rep);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (i) out << ", ";
    out << "{\"region\": " << cuts[i].leaf_position
        << ", \"normalAngle\": " << format_double(cuts[i].cut.normal.angle())
        << ", \"offset\": " << format_double(cuts[i].cut.offset) << "}";
  }
  out << "],\n";
  out << "  \"perSubsetValues\": [";
  for (std::size_t i = 0; i < rep.per_subset_values.size(); ++i) {
    if (i) out << ", ";
    out << format_double(rep.per_subset_values[i]);
  }
  out << "],\n";
  out << "  \"balanced\": " << (rep.balanced ? "true" : "false") << ",\n";
  if (rep.oracle_value) {
    double delta = rep.value ? std::abs(*rep.value - *rep.oracle_value) : 0.0;
    out << "  \"oracle\": {\"value\": " << format_double(*rep.oracle_value)
        << ", \"delta\": " << format_double(delta) << "},\n";
  }
  out << "  \"tolerance\": " << format_double(rep.tolerance) << "\n";
  out << "}\n";
  return out.str();
}

SolveReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::schema_error, std::string("report is not valid JSON: ") + e.what());
  }
  try {
    if (j.value("schema", 0) != 1) fail(Errc::schema_error, "unknown report schema version");
    SolveReport rep;
    rep.problem = j.at("problem").get<std::string>();
    rep.magnitude = j.at("magnitude").get<std::string>();
    rep.n = j.at("n").get<int>();
    if (j.contains("value")) rep.value = j["value"].get<double>();
    if (j.contains("bounds")) {
      BoundsReport b;
      b.lower = j["bounds"].at("lower").get<double>();
      b.lower_strict = j["bounds"].value("lowerStrict", false);
      b.upper = j["bounds"].at("upper").get<double>();
      if (j["bounds"].contains("meshTuple"))
        b.mesh_tuple = j["bounds"]["meshTuple"].get<std::vector<int>>();
      rep.bounds = std::move(b);
    }
    if (j.contains("unsupported")) rep.unsupported = j["unsupported"].get<std::string>();
    if (j.contains("feasibility")) {
      SolveReport::Feasibility f;
      f.a = j["feasibility"].at("a").get<int>();
      f.b = j["feasibility"].at("b").get<int>();
      f.delta = j["feasibility"].at("delta").get<int>();
      f.max_n = j["feasibility"].at("maxN").get<int>();
      rep.feasibility = f;
    }
    for (const auto& c : j.at("cuts")) {
      DivisionTree::CutRecord rec{c.at("region").get<std::size_t>(),
                                  LineCut(Direction(c.at("normalAngle").get<double>()),
                                          c.at("offset").get<double>())};
      rep.cut_records.push_back(rec);
    }
    rep.per_subset_values = j.at("perSubsetValues").get<std::vector<double>>();
    rep.balanced = j.at("balanced").get<bool>();
    rep.tolerance = j.at("tolerance").get<double>();
    if (j.contains("oracle")) rep.oracle_value = j["oracle"].at("value").get<double>();
    return rep;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Errc::schema_error, std::string("malformed report document: ") + e.what());
  }
}

std::vector<double> replay_report(const ConvexPolygon& poly, const SolveReport& rep) {
  DivisionTree tree = replay_division(Body(poly), report_cuts(rep));
  Magnitude m = magnitude_from_string(rep.magnitude);
  std::vector<double> values;
  values.reserve(tree.leaf_count());
  for (std::size_t i = 0; i < tree.leaf_count(); ++i) values.push_back(measure(tree.leaf(i), m));
  return values;
}

ConvexPolygon polygon_from_json(const std::string& text, std::string* name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::schema_error, std::string("polygon document is not valid JSON: ") + e.what());
  }
  try {
    if (j.contains("schema") && j["schema"].get<int>() != 1)
      fail(Errc::schema_error, "unknown polygon schema version");
    if (name && j.contains("name")) *name = j["name"].get<std::string>();
    std::vector<Vec2> pts;
    for (const auto& v : j.at("vertices")) {
      if (!v.is_array() || v.size() != 2) fail(Errc::schema_error, "vertices must be [x, y] pairs");
      pts.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    return validate_polygon(pts);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Errc::schema_error, std::string("malformed polygon document: ") + e.what());
  }
}

std::string polygon_to_json(const ConvexPolygon& poly, const std::string& name) {
  std::ostringstream out;
  out << "{\n  \"schema\": 1,\n  \"name\": \"" << name << "\",\n  \"vertices\": [";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i) out << ", ";
    out << "[" << format_double(poly.vertex(i).x) << ", " << format_double(poly.vertex(i).y)
        << "]";
  }
  out << "]\n}\n";
  return out.str();
}

}  // namespace convdiv
