#include "convdiv/convdiv.h"

#include <cstring>
#include <new>
#include <string>

#include "core/maxmin.hpp"
#include "core/medial.hpp"
#include "core/minmax.hpp"
#include "core/oracle.hpp"
#include "core/report.hpp"
#include "core/svg.hpp"

using namespace convdiv;

struct cdv_polygon {
  ConvexPolygon poly;
};
struct cdv_report {
  SolveReport rep;
};

namespace {

thread_local std::string g_last_error;

cdv_status status_of(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return CDV_ERR_INVALID_ARGUMENT;
    case Errc::not_convex: return CDV_ERR_NOT_CONVEX;
    case Errc::degenerate_area: return CDV_ERR_DEGENERATE;
    case Errc::too_few_vertices: return CDV_ERR_TOO_FEW_VERTICES;
    case Errc::cut_misses_interior: return CDV_ERR_CUT_MISSES_INTERIOR;
    case Errc::rho_out_of_range: return CDV_ERR_RHO_RANGE;
    case Errc::tolerance_not_reached: return CDV_ERR_TOLERANCE;
    case Errc::not_affine_between_breakpoints: return CDV_ERR_NOT_AFFINE;
    case Errc::infeasible_n: return CDV_INFEASIBLE;
    case Errc::construction_failed: return CDV_ERR_CONSTRUCTION;
    case Errc::verification_failed: return CDV_ERR_VERIFICATION;
    case Errc::unsupported: return CDV_UNSUPPORTED;
    case Errc::schema_error: return CDV_ERR_SCHEMA;
  }
  return CDV_ERR_INVALID_ARGUMENT;
}

template <typename Fn>
cdv_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CDV_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CDV_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CDV_ERR_INVALID_ARGUMENT;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

SearchGrid oracle_grid_for(int n) {
  // The three-subset scan nests a full two-subset search per candidate cut;
  // keep it coarse and rely on the refinement rounds.
  if (n >= 3) return SearchGrid(42, 26, 3);
  return SearchGrid(180, 96, 3);
}

void attach_oracle(const ConvexPolygon& poly, SolveReport& rep, const std::string& problem,
                   Magnitude mag, int n) {
  if (n > 3) return;
  Objective obj = objective_from_string(problem);
  if (n == 2)
    rep.oracle_value = brute_2division(Body(poly), mag, obj, oracle_grid_for(2)).value;
  else
    rep.oracle_value = brute_3division(Body(poly), mag, obj, oracle_grid_for(3));
}

SolveReport solve_dispatch(const ConvexPolygon& poly, const cdv_solve_options& o,
                           cdv_status& status) {
  status = CDV_OK;
  std::string problem = o.problem ? o.problem : "";
  std::string magnitude = o.magnitude ? o.magnitude : "";
  if (problem != "minmax" && problem != "maxmin")
    fail(Errc::invalid_argument, "problem must be minmax or maxmin");
  Magnitude mag = magnitude_from_string(magnitude);
  if (o.n < 2) fail(Errc::invalid_argument, "need n >= 2");

  SolveReport rep;
  if (problem == "minmax") {
    if (mag == Magnitude::width) {
      rep = minmax_width_solve(poly, o.n);
    } else if (mag == Magnitude::inradius) {
      rep = conway_solve(poly, o.n);
    } else {
      rep.problem = "minmax";
      rep.magnitude = "diameter";
      rep.n = o.n;
      rep.tolerance = 1e-9;
      BoundsReport b = minmax_diameter_bounds(orthogonal_widths_2d(poly), diameter_value(poly), o.n);
      DivisionTree mesh = minmax_diameter_mesh_division(
          poly, {(*b.mesh_tuple)[0], b.mesh_tuple->size() > 1 ? (*b.mesh_tuple)[1] : 1});
      for (std::size_t i = 0; i < mesh.leaf_count(); ++i)
        rep.per_subset_values.push_back(measure(mesh.leaf(i), Magnitude::diameter));
      rep.division = std::move(mesh);
      rep.bounds = std::move(b);
    }
  } else {
    if (mag == Magnitude::diameter) {
      DiameterFeasibility feas = maxmin_diameter_feasible(poly, o.n);
      rep.problem = "maxmin";
      rep.magnitude = "diameter";
      rep.n = o.n;
      rep.tolerance = 1e-7;
      rep.value = maxmin_diameter_value(poly);
      rep.feasibility = SolveReport::Feasibility{feas.best_set.interior_count,
                                                 feas.best_set.boundary_count,
                                                 feas.best_set.delta(), feas.max_n};
      if (!feas.feasible) {
        status = CDV_INFEASIBLE;
        g_last_error = "no optimal division for n = " + std::to_string(o.n) +
                       " (max feasible " + std::to_string(feas.max_n) + ")";
      } else {
        DivisionTree tree = maxmin_diameter_division(poly, o.n);
        for (std::size_t i = 0; i < tree.leaf_count(); ++i)
          rep.per_subset_values.push_back(measure(tree.leaf(i), Magnitude::diameter));
        rep.division = std::move(tree);
        rep.balanced = true;
      }
    } else if (mag == Magnitude::width) {
      if (o.n == 2) {
        MaxminWidthOptions wopt;
        if (o.tol > 0.0) wopt.tol = o.tol;
        rep = maxmin_width_2_solve(Body(poly), wopt);
        rep.bounds = maxmin_width_bounds(poly, 2);
      } else {
        rep.problem = "maxmin";
        rep.magnitude = "width";
        rep.n = o.n;
        rep.bounds = maxmin_width_bounds(poly, o.n);
        rep.unsupported = "bounds only";
        status = CDV_UNSUPPORTED;
        g_last_error = "max-min width optimum is only computed for n = 2; reporting bounds";
      }
    } else {
      if (o.n == 2) {
        rep = maxmin_inradius_2_solve(poly, o.tol > 0.0 ? o.tol : 1e-5);
      } else {
        rep.problem = "maxmin";
        rep.magnitude = "inradius";
        rep.n = o.n;
        BoundsReport b;
        b.lower = maxmin_inradius_bound(poly, o.n);
        b.upper = inradius(poly).value;
        rep.bounds = std::move(b);
        rep.unsupported = "bounds only";
        status = CDV_UNSUPPORTED;
        g_last_error = "max-min inradius optimum is only computed for n = 2; reporting bounds";
      }
    }
  }
  if (o.with_oracle && status == CDV_OK) attach_oracle(poly, rep, problem, mag, o.n);
  return rep;
}

}  // namespace

extern "C" {

const char* cdv_version(void) { return "0.1.0"; }

const char* cdv_last_error(void) { return g_last_error.c_str(); }

void cdv_string_free(char* s) { delete[] s; }

cdv_status cdv_polygon_create(const double* xy, size_t n, cdv_polygon** out) {
  if (!xy || !out) {
    g_last_error = "null argument";
    return CDV_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    std::vector<Vec2> pts;
    pts.reserve(n);
    for (size_t i = 0; i < n; ++i) pts.emplace_back(xy[2 * i], xy[2 * i + 1]);
    *out = new cdv_polygon{validate_polygon(pts)};
  });
}

cdv_status cdv_polygon_from_json(const char* json, cdv_polygon** out) {
  if (!json || !out) {
    g_last_error = "null argument";
    return CDV_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new cdv_polygon{polygon_from_json(json)}; });
}

cdv_status cdv_polygon_to_json(const cdv_polygon* poly, const char* name, char** out_json) {
  if (!poly || !out_json) {
    g_last_error = "null argument";
    return CDV_ERR_INVALID_ARGUMENT;
  }
  return guarded(
      [&] { *out_json = dup_string(polygon_to_json(poly->poly, name ? name : "polygon")); });
}

void cdv_polygon_free(cdv_polygon* poly) { delete poly; }

cdv_status cdv_polygon_measure(const cdv_polygon* poly, cdv_measures* out) {
  if (!poly || !out) {
    g_last_error = "null argument";
    return CDV_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    out->width = width(poly->poly).value;
    out->diameter = diameter_value(poly->poly);
    out->inradius = inradius(poly->poly).value;
    out->area = poly->poly.area();
  });
}

cdv_status cdv_solve(const cdv_polygon* poly, const cdv_solve_options* opts, cdv_report** out) {
  if (!poly || !opts || !out) {
    g_last_error = "null argument";
    return CDV_ERR_INVALID_ARGUMENT;
  }
  cdv_status inner = CDV_OK;
  cdv_status st = guarded([&] {
    SolveReport rep = solve_dispatch(poly->poly, *opts, inner);
    *out = new cdv_report{std::move(rep)};
  });
  return st == CDV_OK ? inner : st;
}

cdv_status cdv_report_to_json(const cdv_report* rep, char** out_json) {
  if (!rep || !out_json) {
    g_last_error = "null argument";
    return CDV_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out_json = dup_string(report_to_json(rep->rep)); });
}

cdv_status cdv_report_from_json(const char* json, cdv_report** out) {
  if (!json || !out) {
    g_last_error = "null argument";
    return CDV_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new cdv_report{report_from_json(json)}; });
}

void cdv_report_free(cdv_report* rep) { delete rep; }

cdv_status cdv_report_replay(const cdv_polygon* poly, const cdv_report* rep, double* values,
                             size_t cap, size_t* n_out) {
  if (!poly || !rep || !n_out) {
    g_last_error = "null argument";
    return CDV_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    std::vector<double> vals = replay_report(poly->poly, rep->rep);
    *n_out = vals.size();
    if (values)
      for (size_t i = 0; i < vals.size() && i < cap; ++i) values[i] = vals[i];
  });
}

cdv_status cdv_render_svg(const cdv_polygon* poly, const cdv_report* rep, char** out_svg) {
  if (!poly || !rep || !out_svg) {
    g_last_error = "null argument";
    return CDV_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out_svg = dup_string(render_svg(poly->poly, rep->rep)); });
}

cdv_status cdv_oracle_division(const cdv_polygon* poly, const char* problem,
                               const char* magnitude, int n, const cdv_grid* grid,
                               double* value_out) {
  if (!poly || !problem || !magnitude || !value_out) {
    g_last_error = "null argument";
    return CDV_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    if (n < 2 || n > 3) fail(Errc::unsupported, "oracle supports n = 2 and n = 3 only");
    SearchGrid g = oracle_grid_for(n);
    if (grid) {
      if (grid->angle_samples > 0) g.angle_samples = grid->angle_samples;
      if (grid->offset_samples > 0) g.offset_samples = grid->offset_samples;
      if (grid->refine_rounds >= 0) g.refine_rounds = grid->refine_rounds;
    }
    Objective obj = objective_from_string(problem);
    Magnitude mag = magnitude_from_string(magnitude);
    *value_out = (n == 2) ? brute_2division(Body(poly->poly), mag, obj, g).value
                          : brute_3division(Body(poly->poly), mag, obj, g);
  });
}

cdv_status cdv_random_division_sums(const cdv_polygon* poly, int n, unsigned long long seed,
                                    double* sum_width, double* sum_inradius, double* body_width,
                                    double* body_inradius) {
  if (!poly || !sum_width || !sum_inradius || !body_width || !body_inradius) {
    g_last_error = "null argument";
    return CDV_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    DivisionTree tree = random_division(Body(poly->poly), n, seed);
    double sw = 0.0, si = 0.0;
    for (std::size_t i = 0; i < tree.leaf_count(); ++i) {
      sw += measure(tree.leaf(i), Magnitude::width);
      si += measure(tree.leaf(i), Magnitude::inradius);
    }
    *sum_width = sw;
    *sum_inradius = si;
    *body_width = width(poly->poly).value;
    *body_inradius = inradius(poly->poly).value;
  });
}

}  // extern "C"
