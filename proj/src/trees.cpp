#include "assoc/trees.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace assoc::trees {

using associahedron::Bracket;
using associahedron::Bracketing;

int PlaneTree::leaves() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& c : children) n += c.leaves();
  return n;
}

bool PlaneTree::is_binary() const {
  if (is_leaf()) return true;
  if (children.size() != 2) return false;
  return children[0].is_binary() && children[1].is_binary();
}

PlaneTree leaf() { return {}; }

PlaneTree node(std::vector<PlaneTree> children) {
  PlaneTree t{std::move(children)};
  if (t.children.size() == 1) throw std::invalid_argument("internal node of arity 1");
  return t;
}

PlaneTree corolla(int n) {
  if (n < 1) throw std::invalid_argument("corolla needs n >= 1");
  if (n == 1) return leaf();
  return node(std::vector<PlaneTree>(n, leaf()));
}

PlaneTree left_comb(int n) {
  if (n < 1) throw std::invalid_argument("comb needs n >= 1");
  PlaneTree t = leaf();
  for (int i = 1; i < n; ++i) t = node({t, leaf()});
  return t;
}

PlaneTree right_comb(int n) {
  if (n < 1) throw std::invalid_argument("comb needs n >= 1");
  PlaneTree t = leaf();
  for (int i = 1; i < n; ++i) t = node({leaf(), t});
  return t;
}

void validate(const PlaneTree& t) {
  if (t.children.size() == 1) throw std::invalid_argument("internal node of arity 1 in " + to_string(t));
  for (const auto& c : t.children) validate(c);
}

std::string to_string(const PlaneTree& t) {
  if (t.is_leaf()) return "*";
  std::string out = "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ' ';
    out += to_string(t.children[i]);
  }
  return out + ")";
}

namespace {

struct TreeParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad tree '" + std::string(text) + "' at " + std::to_string(pos) + ": " + why);
  }
  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  PlaneTree parse() {
    skip();
    if (pos >= text.size()) fail("unexpected end");
    if (text[pos] == '*') {
      ++pos;
      return leaf();
    }
    if (text[pos] != '(') fail("expected '*' or '('");
    ++pos;
    std::vector<PlaneTree> kids;
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == ')') break;
      kids.push_back(parse());
    }
    ++pos;
    if (kids.size() < 2) fail("internal node needs at least two children");
    return PlaneTree{std::move(kids)};
  }
};

}  // namespace

PlaneTree parse_tree(std::string_view text) {
  TreeParser p{text};
  PlaneTree t = p.parse();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing characters");
  return t;
}

BinaryTree::BinaryTree(PlaneTree t) : tree_(std::move(t)) {
  if (!tree_.is_binary()) throw std::invalid_argument("not a binary tree: " + to_string(tree_));
}

namespace {

// every way of writing n as an ordered sum of `parts` positive integers
void compositions(int n, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (int first = 1; first <= n - (parts - 1); ++first) {
    cur.push_back(first);
    compositions(n - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<PlaneTree> enumerate(int n, int max_arity, std::map<int, std::vector<PlaneTree>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<PlaneTree> out;
  if (n == 1) {
    out.push_back(leaf());
  } else {
    for (int arity = 2; arity <= std::min(n, max_arity); ++arity) {
      std::vector<std::vector<int>> comps;
      std::vector<int> cur;
      compositions(n, arity, cur, comps);
      for (const auto& comp : comps) {
        std::vector<std::vector<PlaneTree>> options;
        for (int part : comp) options.push_back(enumerate(part, max_arity, memo));
        std::vector<PlaneTree> kids(comp.size());
        std::function<void(std::size_t)> pick = [&](std::size_t i) {
          if (i == comp.size()) {
            out.push_back(PlaneTree{kids});
            return;
          }
          for (const auto& o : options[i]) {
            kids[i] = o;
            pick(i + 1);
          }
        };
        pick(0);
      }
    }
  }
  memo[n] = out;
  return out;
}

}  // namespace

std::vector<PlaneTree> enumerate_plane_trees(int n) {
  if (n < 2) throw std::invalid_argument("enumerate_plane_trees needs n >= 2");
  std::map<int, std::vector<PlaneTree>> memo;
  return enumerate(n, n, memo);
}

std::vector<BinaryTree> enumerate_binary_trees(int n) {
  if (n < 2) throw std::invalid_argument("enumerate_binary_trees needs n >= 2");
  std::map<int, std::vector<PlaneTree>> memo;
  std::vector<BinaryTree> out;
  for (auto& t : enumerate(n, 2, memo)) out.emplace_back(std::move(t));
  return out;
}

namespace {

int collect(const PlaneTree& t, int first, bool root, std::vector<Bracket>& out) {
  if (t.is_leaf()) return 1;
  int span = 0;
  for (const auto& c : t.children) span += collect(c, first + span, false, out);
  if (!root) out.push_back({first + 1, first + span});
  return span;
}

}  // namespace

Bracketing tree_to_bracketing(const PlaneTree& t) {
  validate(t);
  std::vector<Bracket> brackets;
  int n = collect(t, 0, true, brackets);
  return Bracketing(n, std::move(brackets));
}

PlaneTree bracketing_to_tree(const Bracketing& b) {
  // brackets are sorted outer-first, so each bracket's children follow it
  std::vector<Bracket> all{{1, b.letters()}};
  all.insert(all.end(), b.brackets().begin(), b.brackets().end());
  std::size_t next = 0;
  std::function<PlaneTree()> build = [&]() -> PlaneTree {
    Bracket here = all[next++];
    std::vector<PlaneTree> kids;
    int letter = here.l;
    while (letter <= here.r) {
      if (next < all.size() && all[next].l == letter && here.contains(all[next])) {
        int end = all[next].r;
        kids.push_back(build());
        letter = end + 1;
      } else {
        kids.push_back(leaf());
        ++letter;
      }
    }
    return PlaneTree{std::move(kids)};
  };
  if (b.letters() == 1) return leaf();
  return build();
}

namespace {

int weights(const PlaneTree& t, int first, int n, std::vector<long long>& out) {
  if (t.is_leaf()) return 1;
  int left = weights(t.children[0], first, n, out);
  int right = weights(t.children[1], first + left, n, out);
  int vertex = first + left;
  out[n - 1 - vertex] = static_cast<long long>(left) * right;
  return left + right;
}

}  // namespace

std::vector<long long> loday_point(const BinaryTree& t) {
  int n = t.leaves();
  std::vector<long long> out(n - 1, 0);
  weights(t.tree(), 0, n, out);
  return out;
}

namespace {

// nullopt when the whole subtree was the deleted leaf
std::optional<PlaneTree> drop(const PlaneTree& t, int& remaining) {
  if (t.is_leaf()) {
    if (remaining-- == 0) return std::nullopt;
    return t;
  }
  std::vector<PlaneTree> kids;
  for (const auto& c : t.children)
    if (auto k = drop(c, remaining)) kids.push_back(std::move(*k));
  if (kids.size() == 1) return kids.front();
  return PlaneTree{std::move(kids)};
}

}  // namespace

PlaneTree delete_leaf(const PlaneTree& t, int j) {
  int n = t.leaves();
  if (j < 1 || j > n) throw std::out_of_range("leaf " + std::to_string(j) + " out of range 1.." + std::to_string(n));
  if (n < 3) throw std::invalid_argument("delete_leaf needs at least three leaves");
  int remaining = j - 1;
  return *drop(t, remaining);
}

}  // namespace assoc::trees
