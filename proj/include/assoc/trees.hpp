#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "assoc/bracketing.hpp"

namespace assoc::trees {

/// Rooted plane tree.  A node with no children is a leaf; internal nodes have
/// at least two children.
struct PlaneTree {
  std::vector<PlaneTree> children;

  bool is_leaf() const { return children.empty(); }
  int leaves() const;
  bool is_binary() const;
  bool operator==(const PlaneTree&) const = default;
};

PlaneTree leaf();
PlaneTree node(std::vector<PlaneTree> children);
PlaneTree corolla(int n);
/// ((a1 a2) a3) ... an
PlaneTree left_comb(int n);
/// a1 (a2 (... (an-1 an)))
PlaneTree right_comb(int n);

/// Throws unless every internal node has arity >= 2.
void validate(const PlaneTree& t);

/// "*" for a leaf, "(c1 ... ck)" for a node.
std::string to_string(const PlaneTree& t);
PlaneTree parse_tree(std::string_view text);

/// A plane tree whose internal nodes are all binary.
class BinaryTree {
 public:
  explicit BinaryTree(PlaneTree t);
  const PlaneTree& tree() const { return tree_; }
  int leaves() const { return tree_.leaves(); }
  bool operator==(const BinaryTree&) const = default;

 private:
  PlaneTree tree_;
};

/// All plane trees with n leaves, in a fixed recursive order.
std::vector<PlaneTree> enumerate_plane_trees(int n);
std::vector<BinaryTree> enumerate_binary_trees(int n);

/// A non-root node over leaves k..l (0-indexed) gives bracket [k+1, l+1].
associahedron::Bracketing tree_to_bracketing(const PlaneTree& t);
PlaneTree bracketing_to_tree(const associahedron::Bracketing& b);

/// Integer point of a binary tree with n leaves, one coordinate per internal
/// vertex.  Vertex v sits between leaves v-1 and v; its weight is the product
/// of the leaf counts of its left and right subtrees.  Coordinates are listed
/// from vertex n-1 down to vertex 1, so the left comb on three leaves is
/// (2,1) and the right comb on four leaves is (1,2,3).
std::vector<long long> loday_point(const BinaryTree& t);

/// Removes leaf j (1-indexed) and smooths the unary node left behind.
PlaneTree delete_leaf(const PlaneTree& t, int j);

}  // namespace assoc::trees
