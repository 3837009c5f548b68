#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include <convdiv/convdiv.h>

namespace {

cdv_polygon* square() {
  const double xy[] = {0, 0, 1, 0, 1, 1, 0, 1};
  cdv_polygon* p = nullptr;
  REQUIRE(cdv_polygon_create(xy, 4, &p) == CDV_OK);
  return p;
}

cdv_polygon* triangle() {
  const double h = std::sqrt(3.0) / 2.0;
  const double xy[] = {0, 0, 1, 0, 0.5, h};
  cdv_polygon* p = nullptr;
  REQUIRE(cdv_polygon_create(xy, 3, &p) == CDV_OK);
  return p;
}

}  // namespace

TEST_CASE("polygon lifecycle and validation errors") {
  cdv_polygon* p = nullptr;
  CHECK(cdv_polygon_from_json(R"({"schema":1,"name":"sq","vertices":[[0,0],[1,0],[1,1],[0,1]]})",
                              &p) == CDV_OK);
  cdv_measures m{};
  CHECK(cdv_polygon_measure(p, &m) == CDV_OK);
  CHECK(m.width == doctest::Approx(1.0));
  CHECK(m.diameter == doctest::Approx(std::sqrt(2.0)));
  CHECK(m.inradius == doctest::Approx(0.5));
  CHECK(m.area == doctest::Approx(1.0));
  char* json = nullptr;
  CHECK(cdv_polygon_to_json(p, "sq", &json) == CDV_OK);
  CHECK(std::string(json).find("\"sq\"") != std::string::npos);
  cdv_string_free(json);
  cdv_polygon_free(p);

  const double bad[] = {0, 0, 2, 0, 1, 0.4, 0, 1};
  cdv_polygon* q = nullptr;
  CHECK(cdv_polygon_create(bad, 4, &q) == CDV_ERR_NOT_CONVEX);
  CHECK(std::strlen(cdv_last_error()) > 0);
  CHECK(cdv_polygon_from_json("nonsense", &q) == CDV_ERR_SCHEMA);
}

TEST_CASE("solving through the C API") {
  cdv_polygon* p = square();
  cdv_solve_options opts{"minmax", "width", 4, 0.0, 0};
  cdv_report* rep = nullptr;
  REQUIRE(cdv_solve(p, &opts, &rep) == CDV_OK);
  char* json = nullptr;
  REQUIRE(cdv_report_to_json(rep, &json) == CDV_OK);
  std::string text(json);
  cdv_string_free(json);
  CHECK(text.find("\"value\": 0.25") != std::string::npos);

  cdv_report* parsed = nullptr;
  REQUIRE(cdv_report_from_json(text.c_str(), &parsed) == CDV_OK);
  double values[8];
  size_t n_out = 0;
  REQUIRE(cdv_report_replay(p, parsed, values, 8, &n_out) == CDV_OK);
  CHECK(n_out == 4);
  for (size_t i = 0; i < n_out; ++i) CHECK(values[i] == doctest::Approx(0.25).epsilon(1e-9));

  char* svg = nullptr;
  REQUIRE(cdv_render_svg(p, parsed, &svg) == CDV_OK);
  CHECK(std::string(svg).find("<svg") == 0);
  cdv_string_free(svg);

  cdv_report_free(parsed);
  cdv_report_free(rep);
  cdv_polygon_free(p);
}

TEST_CASE("status codes for infeasible and unsupported combinations") {
  cdv_polygon* tri = triangle();
  cdv_solve_options opts{"maxmin", "diameter", 3, 0.0, 0};
  cdv_report* rep = nullptr;
  CHECK(cdv_solve(tri, &opts, &rep) == CDV_INFEASIBLE);
  REQUIRE(rep != nullptr);
  char* json = nullptr;
  REQUIRE(cdv_report_to_json(rep, &json) == CDV_OK);
  std::string text(json);
  cdv_string_free(json);
  CHECK(text.find("\"maxN\": 2") != std::string::npos);
  cdv_report_free(rep);

  cdv_solve_options unsupported{"maxmin", "inradius", 3, 0.0, 0};
  cdv_report* rep2 = nullptr;
  CHECK(cdv_solve(tri, &unsupported, &rep2) == CDV_UNSUPPORTED);
  REQUIRE(rep2 != nullptr);
  char* json2 = nullptr;
  REQUIRE(cdv_report_to_json(rep2, &json2) == CDV_OK);
  std::string text2(json2);
  cdv_string_free(json2);
  CHECK(text2.find("bounds only") != std::string::npos);
  CHECK(text2.find("\"bounds\"") != std::string::npos);
  cdv_report_free(rep2);

  cdv_solve_options bad{"sideways", "width", 2, 0.0, 0};
  cdv_report* rep3 = nullptr;
  CHECK(cdv_solve(tri, &bad, &rep3) == CDV_ERR_INVALID_ARGUMENT);
  cdv_polygon_free(tri);
}

TEST_CASE("oracle and random division entry points") {
  cdv_polygon* p = square();
  double value = 0.0;
  cdv_grid grid{90, 48, 2};
  REQUIRE(cdv_oracle_division(p, "minmax", "width", 2, &grid, &value) == CDV_OK);
  CHECK(value == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(cdv_oracle_division(p, "minmax", "width", 5, &grid, &value) == CDV_UNSUPPORTED);

  double sw = 0, si = 0, bw = 0, bi = 0;
  REQUIRE(cdv_random_division_sums(p, 4, 7, &sw, &si, &bw, &bi) == CDV_OK);
  CHECK(sw >= bw - 1e-9);
  CHECK(si >= bi - 1e-9);
  cdv_polygon_free(p);
}

TEST_CASE("conway through the API carries the oracle when asked") {
  cdv_polygon* tri = triangle();
  cdv_solve_options opts{"minmax", "inradius", 3, 0.0, 1};
  cdv_report* rep = nullptr;
  REQUIRE(cdv_solve(tri, &opts, &rep) == CDV_OK);
  char* json = nullptr;
  REQUIRE(cdv_report_to_json(rep, &json) == CDV_OK);
  std::string text(json);
  cdv_string_free(json);
  CHECK(text.find("\"oracle\"") != std::string::npos);
  cdv_report_free(rep);
  cdv_polygon_free(tri);
}
