// Command-line front end. Talks to the library exclusively through the C API.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <convdiv/convdiv.h>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int exit_code_for(cdv_status st) {
  switch (st) {
    case CDV_OK: return 0;
    case CDV_UNSUPPORTED: return 2;
    case CDV_INFEASIBLE: return 3;
    default: return 1;
  }
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

struct PolygonHandle {
  cdv_polygon* p = nullptr;
  ~PolygonHandle() { cdv_polygon_free(p); }
};
struct ReportHandle {
  cdv_report* r = nullptr;
  ~ReportHandle() { cdv_report_free(r); }
};
struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { cdv_string_free(s); }
};

int run_solve(const std::string& input, const std::string& problem, const std::string& magnitude,
              int n, double tol, const std::string& svg_path, bool with_oracle) {
  auto text = read_file(input);
  if (!text) {
    std::cerr << "error: cannot read " << input << "\n";
    return 1;
  }
  PolygonHandle poly;
  if (cdv_polygon_from_json(text->c_str(), &poly.p) != CDV_OK) {
    std::cerr << "error: " << cdv_last_error() << "\n";
    return 1;
  }
  cdv_solve_options opts{problem.c_str(), magnitude.c_str(), n, tol, with_oracle ? 1 : 0};
  ReportHandle rep;
  cdv_status st = cdv_solve(poly.p, &opts, &rep.r);
  if (!rep.r) {
    std::cerr << "error: " << cdv_last_error() << "\n";
    return exit_code_for(st) == 0 ? 1 : exit_code_for(st);
  }
  StringHandle json;
  if (cdv_report_to_json(rep.r, &json.s) != CDV_OK) {
    std::cerr << "error: " << cdv_last_error() << "\n";
    return 1;
  }
  std::cout << json.s;
  if (!svg_path.empty()) {
    StringHandle svg;
    if (cdv_render_svg(poly.p, rep.r, &svg.s) != CDV_OK) {
      std::cerr << "error: " << cdv_last_error() << "\n";
      return 1;
    }
    if (!write_file(svg_path, svg.s)) {
      std::cerr << "error: cannot write " << svg_path << "\n";
      return 1;
    }
  }
  return exit_code_for(st);
}

int run_render(const std::string& input, const std::string& report_path,
               const std::string& svg_path) {
  auto ptext = read_file(input);
  auto rtext = read_file(report_path);
  if (!ptext || !rtext) {
    std::cerr << "error: cannot read input files\n";
    return 1;
  }
  PolygonHandle poly;
  if (cdv_polygon_from_json(ptext->c_str(), &poly.p) != CDV_OK) {
    std::cerr << "error: " << cdv_last_error() << "\n";
    return 1;
  }
  ReportHandle rep;
  if (cdv_report_from_json(rtext->c_str(), &rep.r) != CDV_OK) {
    std::cerr << "error: " << cdv_last_error() << "\n";
    return 1;
  }
  StringHandle svg;
  if (cdv_render_svg(poly.p, rep.r, &svg.s) != CDV_OK) {
    std::cerr << "error: " << cdv_last_error() << "\n";
    return 1;
  }
  if (!write_file(svg_path, svg.s)) {
    std::cerr << "error: cannot write " << svg_path << "\n";
    return 1;
  }
  return 0;
}

struct CorpusRow {
  std::string name;
  std::string fields;
  std::vector<std::string> problems;
};

// Runs the solver suite plus consistency checks on one polygon document.
CorpusRow corpus_one(const std::string& name, const std::string& text) {
  CorpusRow row;
  row.name = name;
  PolygonHandle poly;
  if (cdv_polygon_from_json(text.c_str(), &poly.p) != CDV_OK) {
    row.problems.push_back(std::string("invalid polygon: ") + cdv_last_error());
    return row;
  }
  cdv_measures m{};
  cdv_polygon_measure(poly.p, &m);

  auto check = [&](bool ok, const std::string& what) {
    if (!ok) row.problems.push_back(what);
  };
  auto solve_json = [&](const char* problem, const char* magnitude, int n, bool oracle,
                        cdv_status* st_out) -> nlohmann::json {
    cdv_solve_options opts{problem, magnitude, n, 0.0, oracle ? 1 : 0};
    ReportHandle rep;
    cdv_status st = cdv_solve(poly.p, &opts, &rep.r);
    if (st_out) *st_out = st;
    if (!rep.r) return nlohmann::json();
    StringHandle json;
    cdv_report_to_json(rep.r, &json.s);

    // Round-trip and replay consistency on every report produced here.
    ReportHandle back;
    check(cdv_report_from_json(json.s, &back.r) == CDV_OK, "report parse failed");
    if (back.r) {
      StringHandle again;
      cdv_report_to_json(back.r, &again.s);
      check(std::string(json.s) == again.s, "report round-trip changed bytes");
      nlohmann::json j = nlohmann::json::parse(json.s);
      if (j.contains("perSubsetValues") && !j["perSubsetValues"].empty() && st == CDV_OK) {
        std::vector<double> expect = j["perSubsetValues"].get<std::vector<double>>();
        std::vector<double> got(expect.size());
        size_t n_out = 0;
        check(cdv_report_replay(poly.p, back.r, got.data(), got.size(), &n_out) == CDV_OK,
              "replay failed");
        check(n_out == expect.size(), "replay subset count mismatch");
        for (size_t i = 0; i < std::min(n_out, expect.size()); ++i)
          check(std::abs(got[i] - expect[i]) <= 1e-9 * (1.0 + std::abs(expect[i])),
                "replay values drifted");
      }
    }
    return nlohmann::json::parse(std::string(json.s));
  };

  cdv_status st = CDV_OK;
  nlohmann::json mw = solve_json("minmax", "width", 4, false, &st);
  double mw_val = mw.value("value", 0.0);
  check(st == CDV_OK && std::abs(mw_val - m.width / 4.0) <= 1e-12 * m.width,
        "min-max width is not w/4");
  for (double v : mw.value("perSubsetValues", std::vector<double>{}))
    check(std::abs(v - m.width / 4.0) <= 1e-9 * m.width, "min-max width strip unbalanced");

  nlohmann::json cw = solve_json("minmax", "inradius", 2, true, &st);
  double conway = cw.value("value", 0.0);
  check(st == CDV_OK, "conway solve failed");
  check(conway >= m.inradius / 2.0 - 1e-9 * m.inradius, "conway below inradius/2");
  double delta = cw.contains("oracle") ? cw["oracle"].value("delta", 1.0) : 1.0;
  check(delta <= 5e-4 * (1.0 + m.inradius), "conway disagrees with the oracle");

  nlohmann::json mmw = solve_json("maxmin", "width", 2, false, &st);
  double mmw_val = mmw.value("value", 0.0);
  check(st == CDV_OK, "max-min width solve failed");
  check(mmw_val >= m.width / 2.0 - 1e-6 && mmw_val <= std::min(m.width, m.diameter / 2.0) + 1e-6,
        "max-min width escaped its bounds");
  check(mmw.value("balanced", false), "max-min width division unbalanced");

  nlohmann::json mmd = solve_json("maxmin", "diameter", 2, false, &st);
  int max_n = mmd.contains("feasibility") ? mmd["feasibility"].value("maxN", 0) : 0;
  if (st == CDV_OK) {
    for (double v : mmd.value("perSubsetValues", std::vector<double>{}))
      check(std::abs(v - m.diameter) <= 1e-7 * m.diameter, "max-min diameter subset short");
  } else {
    check(st == CDV_INFEASIBLE, "max-min diameter solve failed");
  }

  for (unsigned long long seed : {1ull, 2ull}) {
    double sw = 0, si = 0, bw = 0, bi = 0;
    check(cdv_random_division_sums(poly.p, 4, seed, &sw, &si, &bw, &bi) == CDV_OK,
          "random division failed");
    check(sw >= bw - 1e-9, "width sum inequality violated");
    check(si >= bi - 1e-9, "inradius sum inequality violated");
  }

  char buf[256];
  std::snprintf(buf, sizeof(buf), "| %.6g | %.6g | %.6g | %.6g | %.6g | %.2e | %.6g | %d |",
                m.width, m.diameter, m.inradius, mw_val, conway, delta, mmw_val, max_n);
  row.fields = buf;
  return row;
}

int run_corpus(const std::string& dir) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (ec) {
    std::cerr << "error: cannot read directory " << dir << "\n";
    return 1;
  }
  if (files.empty()) {
    std::cerr << "error: no polygon documents in " << dir << "\n";
    return 1;
  }
  std::sort(files.begin(), files.end());

  std::cout << "| body | w | D | I | mMw(4) | I_2(2) | oracle d | Mmw(2) | MmD maxN | ok |\n";
  std::cout << "|---|---|---|---|---|---|---|---|---|---|\n";
  int failures = 0;
  std::vector<std::string> complaints;
  for (const fs::path& f : files) {
    auto text = read_file(f.string());
    CorpusRow row = text ? corpus_one(f.stem().string(), *text)
                         : CorpusRow{f.stem().string(), "", {"unreadable file"}};
    bool ok = row.problems.empty();
    if (!ok) ++failures;
    std::cout << "| " << row.name << " "
              << (row.fields.empty() ? "| - | - | - | - | - | - | - | - |" : row.fields)
              << (ok ? " ok |" : " FAIL |") << "\n";
    for (const std::string& p : row.problems) complaints.push_back(row.name + ": " + p);
  }
  for (const std::string& c : complaints) std::cerr << "fail: " << c << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal successive-cut divisions of planar convex bodies"};
  app.require_subcommand(1);

  std::string input, svg_path, report_path, dir;
  std::string problem, magnitude;
  int n = 2;
  double tol = 0.0;
  bool with_oracle = false;

  CLI::App* solve = app.add_subcommand("solve", "Solve a division problem for a polygon");
  solve->add_option("--problem", problem, "minmax or maxmin")->required();
  solve->add_option("--magnitude", magnitude, "diameter, width, or inradius")->required();
  solve->add_option("--n", n, "number of subsets")->required();
  solve->add_option("--input", input, "polygon document (JSON)")->required();
  solve->add_option("--tol", tol, "solver tolerance (0 = default)");
  solve->add_option("--svg", svg_path, "write an SVG rendering here");
  solve->add_flag("--oracle", with_oracle, "also run the brute-force reference");

  CLI::App* render = app.add_subcommand("render", "Render a solved report as SVG");
  render->add_option("--input", input, "polygon document (JSON)")->required();
  render->add_option("--report", report_path, "report document (JSON)")->required();
  render->add_option("--svg", svg_path, "output SVG path")->required();

  CLI::App* corpus = app.add_subcommand("corpus", "Run the solver suite over a directory");
  corpus->add_option("dir", dir, "directory of polygon documents")->required();

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) return run_solve(input, problem, magnitude, n, tol, svg_path, with_oracle);
  if (render->parsed()) return run_render(input, report_path, svg_path);
  return run_corpus(dir);
}
