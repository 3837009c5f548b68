#include "svg.hpp"

#include <cstdio>
#include <sstream>

#include "report.hpp"

namespace convdiv {

namespace {

const char* kPalette[] = {"#9ecae1", "#a1d99b", "#fdae6b", "#bcbddc", "#fc9272",
                          "#c7e9c0", "#fdd0a2", "#dadaeb", "#9edae5", "#e7ba52"};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string render_svg(const ConvexPolygon& poly, const SolveReport& rep) {
  auto [lo, hi] = poly.bbox();
  double mx = 0.05 * (hi.x - lo.x), my = 0.05 * (hi.y - lo.y);
  if (mx == 0.0) mx = 1.0;
  if (my == 0.0) my = 1.0;
  // Flip y so the figure reads in the usual orientation.
  double ysum = lo.y + hi.y;
  auto X = [&](double x) { return x; };
  auto Y = [&](double y) { return ysum - y; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << num(lo.x - mx) << " " << num(lo.y - my) << " " << num(hi.x - lo.x + 2 * mx) << " "
      << num(hi.y - lo.y + 2 * my) << "\">\n";

  std::vector<DivisionTree::CutRecord> cuts = report_cuts(rep);
  std::vector<std::pair<Vec2, Vec2>> chords;
  DivisionTree tree{Body(poly)};
  for (const auto& c : cuts) {
    chords.push_back(body_cut_chord(tree.leaf(c.leaf_position), c.cut));
    tree.split_leaf(c.leaf_position, c.cut);
  }

  // Subset shading.
  for (std::size_t i = 0; i < tree.leaf_count(); ++i) {
    const ConvexPolygon& leaf = std::get<ConvexPolygon>(tree.leaf(i));
    out << "  <polygon points=\"";
    for (std::size_t v = 0; v < leaf.size(); ++v) {
      if (v) out << " ";
      out << num(X(leaf.vertex(v).x)) << "," << num(Y(leaf.vertex(v).y));
    }
    out << "\" fill=\"" << kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))]
        << "\" fill-opacity=\"0.45\" stroke=\"none\"/>\n";
  }

  // Body outline.
  out << "  <polygon points=\"";
  for (std::size_t v = 0; v < poly.size(); ++v) {
    if (v) out << " ";
    out << num(X(poly.vertex(v).x)) << "," << num(Y(poly.vertex(v).y));
  }
  double stroke = 0.004 * poly.scale();
  out << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"" << num(stroke) << "\"/>\n";

  // Cut chords in application order.
  for (const auto& [a, b] : chords) {
    out << "  <line x1=\"" << num(X(a.x)) << "\" y1=\"" << num(Y(a.y)) << "\" x2=\"" << num(X(b.x))
        << "\" y2=\"" << num(Y(b.y)) << "\" stroke=\"#b30000\" stroke-width=\"" << num(stroke)
        << "\" stroke-dasharray=\"" << num(4 * stroke) << " " << num(2 * stroke) << "\"/>\n";
  }

  // Per-subset value annotations.
  double font = 0.035 * poly.scale();
  for (std::size_t i = 0; i < tree.leaf_count() && i < rep.per_subset_values.size(); ++i) {
    const ConvexPolygon& leaf = std::get<ConvexPolygon>(tree.leaf(i));
    Vec2 c = leaf.centroid();
    char val[40];
    std::snprintf(val, sizeof(val), "%.6g", rep.per_subset_values[i]);
    out << "  <text x=\"" << num(X(c.x)) << "\" y=\"" << num(Y(c.y)) << "\" font-size=\""
        << num(font) << "\" text-anchor=\"middle\" fill=\"#222222\">" << val << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace convdiv
