#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "assoc/expression.hpp"
#include "assoc/poset.hpp"
#include "assoc/report.hpp"

namespace assoc::cubeahedron {

/// Tube on the path 1-2-...-n.  Round tubes are node intervals (the whole
/// path allowed); square tubes are single nodes.
struct DesignTube {
  enum class Shape { Round, Square };
  Shape shape = Shape::Round;
  int lo = 0;
  int hi = 0;

  static DesignTube round(int lo, int hi) { return {Shape::Round, lo, hi}; }
  static DesignTube square(int node) { return {Shape::Square, node, node}; }
  bool is_round() const { return shape == Shape::Round; }
  bool operator==(const DesignTube&) const = default;
};

/// Round before square, then by smallest node, then by largest node.
bool operator<(const DesignTube& a, const DesignTube& b);

/// Round tubes: nested, or disjoint and not adjacent.  Any pair with a
/// square: not nested.
bool compatible(const DesignTube& a, const DesignTube& b);

class DesignTubing {
 public:
  DesignTubing() = default;
  DesignTubing(int n, std::vector<DesignTube> tubes);

  int nodes() const { return n_; }
  const std::vector<DesignTube>& tubes() const { return tubes_; }
  std::size_t size() const { return tubes_.size(); }
  int dimension() const { return n_ - static_cast<int>(tubes_.size()); }
  DesignTubing without(std::size_t i) const;
  bool operator==(const DesignTubing&) const = default;

 private:
  int n_ = 0;
  std::vector<DesignTube> tubes_;
};

/// "{R1-2,S3}"; a one-node round tube is "R2"; the empty tubing is "{}".
/// The node count is not part of the text.
std::string to_string(const DesignTubing& t);
DesignTubing parse_tubing(int n, std::string_view text);

/// {"n":3,"tubes":[{"kind":"round","nodes":[2]},{"kind":"square","nodes":[1]}]}
nlohmann::json to_json(const DesignTubing& t);
DesignTubing tubing_from_json(const nlohmann::json& j);

std::vector<DesignTubing> enumerate_design_tubings(int n);

/// U <= U' iff U contains U'; rank n-|U|.
poset::FacePoset build_CP(int n);

/// Letters a1..a(n+1) sit around the nodes.  A round tube brackets the
/// letters on both sides of its nodes, a square splits the argument with
/// ")f(", and an uncovered node becomes a dot.
multiplihedron::FlatExpression tubing_to_expression(const DesignTubing& t);

Report verify_cubeahedron_iso(int n);

/// Ordinary tubings of the path with n nodes: proper intervals, nested or
/// disjoint and non-adjacent, ordered by reverse inclusion.
poset::FacePoset build_tubing_poset(int n);

/// phi o tubing_to_expression against K_{n+2}, plus ordinary tubings of the
/// path with n+1 nodes against K_{n+2}.
Report verify_composed(int n);

}  // namespace assoc::cubeahedron
