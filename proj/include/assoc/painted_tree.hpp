#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "assoc/poset.hpp"

namespace assoc::multiplihedron {

/// Node kinds of a painted tree.  U nodes are unpainted, P nodes are painted
/// with painted children, and T nodes are where the paint stops.
enum class Kind { Leaf, U, P, T };

struct PaintedTree {
  Kind kind = Kind::Leaf;
  std::vector<PaintedTree> children;

  bool is_leaf() const { return kind == Kind::Leaf; }
  int leaves() const;
  bool operator==(const PaintedTree&) const = default;
};

/// Throws unless the tree satisfies the painting rules: the root is P or T,
/// P children are P or T, U and T children are U or leaves, U and P nodes
/// have arity >= 2 and T nodes arity >= 1.
void validate(const PaintedTree& t);
bool is_valid(const PaintedTree& t);

/// "*", "(u ...)", "(p ...)", "(t ...)".
std::string to_string(const PaintedTree& t);
PaintedTree parse_painted_tree(std::string_view text);

/// Single T node over n leaves.
PaintedTree painted_corolla(int n);

std::vector<PaintedTree> enumerate_painted_trees(int n);

/// Sum of (arity-2) over U and P nodes plus (arity-1) over T nodes.
int painted_dimension(const PaintedTree& t);

/// Number of edges whose lower end is an internal node.  Edges are numbered
/// by the preorder position of their lower node among all non-root nodes.
std::vector<int> internal_edges(const PaintedTree& t);

/// Contracts the given internal edges.  A merged node is T if it contains a
/// T node, else P if it contains a P node, else U; nullopt if the result
/// breaks the painting rules.
std::optional<PaintedTree> collapse_edges(const PaintedTree& t, const std::set<int>& edges);

/// Painted trees with n leaves ordered by edge collapse, ranked by dimension.
poset::FacePoset build_Jtree(int n);

}  // namespace assoc::multiplihedron
