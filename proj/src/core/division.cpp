#include "division.hpp"

#include <algorithm>

namespace convdiv {

Magnitude magnitude_from_string(const std::string& s) {
  if (s == "diameter") return Magnitude::diameter;
  if (s == "width") return Magnitude::width;
  if (s == "inradius") return Magnitude::inradius;
  fail(Errc::invalid_argument, "unknown magnitude: " + s);
}

std::string to_string(Magnitude m) {
  switch (m) {
    case Magnitude::diameter: return "diameter";
    case Magnitude::width: return "width";
    case Magnitude::inradius: return "inradius";
  }
  return "?";
}

double support(const Body& body, const Direction& u) {
  return std::visit([&](const auto& b) { return support(b, u); }, body);
}

double breadth(const Body& body, const Direction& u) {
  return std::visit([&](const auto& b) { return breadth(b, u); }, body);
}

std::pair<Body, Body> clip_body(const Body& body, const LineCut& cut) {
  return std::visit(
      [&](const auto& b) -> std::pair<Body, Body> {
        auto [l, r] = clip(b, cut);
        return {Body(std::move(l)), Body(std::move(r))};
      },
      body);
}

std::pair<Vec2, Vec2> body_cut_chord(const Body& body, const LineCut& cut) {
  return std::visit([&](const auto& b) { return cut_chord(b, cut); }, body);
}

double body_scale(const Body& body) {
  return std::visit([](const auto& b) { return b.scale(); }, body);
}

double measure(const Body& body, Magnitude m, double tol) {
  if (const ConvexPolygon* p = std::get_if<ConvexPolygon>(&body)) {
    switch (m) {
      case Magnitude::diameter: return diameter_value(*p);
      case Magnitude::width: return width(*p).value;
      case Magnitude::inradius: return inradius(*p).value;
    }
  }
  const ArcSegmentBody& a = std::get<ArcSegmentBody>(body);
  if (m != Magnitude::width)
    fail(Errc::unsupported, "only width is evaluated on arc-segment bodies");
  return width_arc(a, tol);
}

DivisionTree::DivisionTree(Body root) {
  nodes_.push_back(Node{std::move(root), -1, -1, std::nullopt});
  leaves_.push_back(0);
}

void DivisionTree::split_leaf(std::size_t leaf_position, const LineCut& cut) {
  if (leaf_position >= leaves_.size()) fail(Errc::invalid_argument, "leaf position out of range");
  int id = leaves_[leaf_position];
  auto [l, r] = clip_body(nodes_[static_cast<std::size_t>(id)].region, cut);
  int lid = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{std::move(l), -1, -1, std::nullopt});
  int rid = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{std::move(r), -1, -1, std::nullopt});
  nodes_[static_cast<std::size_t>(id)].left = lid;
  nodes_[static_cast<std::size_t>(id)].right = rid;
  nodes_[static_cast<std::size_t>(id)].cut = cut;
  leaves_[leaf_position] = lid;
  leaves_.insert(leaves_.begin() + static_cast<std::ptrdiff_t>(leaf_position) + 1, rid);
  cut_log_.push_back(CutRecord{leaf_position, cut});
}

DivisionTree replay_division(Body root, const std::vector<DivisionTree::CutRecord>& cuts) {
  DivisionTree tree(std::move(root));
  for (const auto& c : cuts) tree.split_leaf(c.leaf_position, c.cut);
  return tree;
}

LineCut balanced_cut(const Body& body, const Direction& direction, Magnitude m, double tol,
                     int max_iter) {
  double hi = support(body, direction);
  double lo = -support(body, direction.reversed());
  if (!(hi > lo)) fail(Errc::invalid_argument, "degenerate extent along cut direction");
  double total = measure(body, m, 0.1 * tol);
  double span = hi - lo;
  double a = lo + 1e-6 * span;
  double b = hi - 1e-6 * span;

  auto diff = [&](double c) {
    auto [l, r] = clip_body(body, LineCut(direction, c));
    return measure(l, m, 0.1 * tol) - measure(r, m, 0.1 * tol);
  };

  double fa = diff(a), fb = diff(b);
  if (!(fa < 0.0) || !(fb > 0.0))
    fail(Errc::tolerance_not_reached, "magnitude does not bracket a balanced offset");
  for (int it = 0; it < max_iter; ++it) {
    double c = 0.5 * (a + b);
    double fc = diff(c);
    if (std::abs(fc) <= tol * total) return LineCut(direction, c);
    if (fc < 0.0)
      a = c;
    else
      b = c;
  }
  fail(Errc::tolerance_not_reached, "balanced cut bisection budget exhausted");
}

}  // namespace convdiv
