#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arc_body.hpp"
#include "geometry.hpp"

namespace convdiv {

using Body = std::variant<ConvexPolygon, ArcSegmentBody>;

enum class Magnitude { diameter, width, inradius };

Magnitude magnitude_from_string(const std::string& s);
std::string to_string(Magnitude m);

double support(const Body& body, const Direction& u);
double breadth(const Body& body, const Direction& u);
std::pair<Body, Body> clip_body(const Body& body, const LineCut& cut);
std::pair<Vec2, Vec2> body_cut_chord(const Body& body, const LineCut& cut);
double body_scale(const Body& body);

// Diameter and inradius are evaluated on polygons only; width works for both
// polygons and arc-segment chains.
double measure(const Body& body, Magnitude m, double tol = 1e-10);

// Binary tree of successive line cuts. Each cut splits exactly one current
// leaf; leaves are the subsets of the division.
class DivisionTree {
 public:
  explicit DivisionTree(Body root);

  // Splits the leaf at the given position (in current left-to-right leaf
  // order); returns nothing, the former leaf becomes internal.
  void split_leaf(std::size_t leaf_position, const LineCut& cut);

  std::size_t leaf_count() const { return leaves_.size(); }
  const Body& leaf(std::size_t i) const { return nodes_[leaves_[i]].region; }
  const Body& root_region() const { return nodes_[0].region; }

  struct CutRecord {
    std::size_t leaf_position;  // position in the evolving leaf list at apply time
    LineCut cut;
  };
  const std::vector<CutRecord>& cut_sequence() const { return cut_log_; }

  struct Node {
    Body region;
    int left = -1, right = -1;
    std::optional<LineCut> cut;
  };
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  std::vector<Node> nodes_;
  std::vector<int> leaves_;  // node ids in left-to-right order
  std::vector<CutRecord> cut_log_;
};

DivisionTree replay_division(Body root, const std::vector<DivisionTree::CutRecord>& cuts);

// Offset along `direction` splitting the body so the two sides agree on the
// magnitude within tol * measure(body). Found by bisection; the magnitude
// responds monotonically to parallel translation of the cut.
LineCut balanced_cut(const Body& body, const Direction& direction, Magnitude m, double tol,
                     int max_iter = 200);

}  // namespace convdiv
