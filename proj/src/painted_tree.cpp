#include "assoc/painted_tree.hpp"

#include <cctype>
#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "assoc/trees.hpp"

namespace assoc::multiplihedron {

int PaintedTree::leaves() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& c : children) n += c.leaves();
  return n;
}

namespace {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::U: return "u";
    case Kind::P: return "p";
    case Kind::T: return "t";
    default: return "*";
  }
}

// empty string when valid, otherwise the reason
std::string problem(const PaintedTree& t, bool root) {
  if (t.is_leaf()) return root ? "a lone leaf has no painted root" : "";
  if (root && t.kind == Kind::U) return "root must be painted";
  const std::size_t min_arity = t.kind == Kind::T ? 1 : 2;
  if (t.children.size() < min_arity) return std::string(kind_name(t.kind)) + " node with too few children";
  for (const auto& c : t.children) {
    bool painted_child = c.kind == Kind::P || c.kind == Kind::T;
    if (t.kind == Kind::P && !painted_child) return "p node with an unpainted child";
    if (t.kind != Kind::P && painted_child) return std::string(kind_name(t.kind)) + " node with a painted child";
    if (auto why = problem(c, false); !why.empty()) return why;
  }
  return "";
}

}  // namespace

void validate(const PaintedTree& t) {
  if (auto why = problem(t, true); !why.empty()) throw std::invalid_argument("bad painted tree " + to_string(t) + ": " + why);
}

bool is_valid(const PaintedTree& t) { return problem(t, true).empty(); }

std::string to_string(const PaintedTree& t) {
  if (t.is_leaf()) return "*";
  std::string out = "(";
  out += kind_name(t.kind);
  for (const auto& c : t.children) out += " " + to_string(c);
  return out + ")";
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad painted tree '" + std::string(text) + "' at " + std::to_string(pos) + ": " + why);
  }
  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  PaintedTree parse() {
    skip();
    if (pos >= text.size()) fail("unexpected end");
    if (text[pos] == '*') {
      ++pos;
      return {};
    }
    if (text[pos] != '(') fail("expected '*' or '('");
    ++pos;
    skip();
    PaintedTree t;
    if (pos >= text.size()) fail("unexpected end");
    switch (std::tolower(static_cast<unsigned char>(text[pos]))) {
      case 'u': t.kind = Kind::U; break;
      case 'p': t.kind = Kind::P; break;
      case 't': t.kind = Kind::T; break;
      default: fail("expected node kind u, p or t");
    }
    ++pos;
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == ')') break;
      t.children.push_back(parse());
    }
    ++pos;
    return t;
  }
};

}  // namespace

PaintedTree parse_painted_tree(std::string_view text) {
  Parser p{text};
  PaintedTree t = p.parse();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing characters");
  validate(t);
  return t;
}

PaintedTree painted_corolla(int n) {
  if (n < 1) throw std::invalid_argument("painted_corolla needs n >= 1");
  return {Kind::T, std::vector<PaintedTree>(n)};
}

namespace {

PaintedTree unpainted(const trees::PlaneTree& t) {
  if (t.is_leaf()) return {};
  PaintedTree out{Kind::U, {}};
  for (const auto& c : t.children) out.children.push_back(unpainted(c));
  return out;
}

const std::vector<PaintedTree>& unpainted_trees(int n) {
  static std::map<int, std::vector<PaintedTree>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<PaintedTree> out;
  if (n == 1) {
    out.push_back({});
  } else {
    for (const auto& t : trees::enumerate_plane_trees(n)) out.push_back(unpainted(t));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

// every sequence of at least `min_parts` trees from `pool` with leaf counts summing to n
void sequences(int n, std::size_t min_parts, const std::function<const std::vector<PaintedTree>&(int)>& pool,
               std::vector<PaintedTree>& cur, const std::function<void(const std::vector<PaintedTree>&)>& emit) {
  if (n == 0) {
    if (cur.size() >= min_parts) emit(cur);
    return;
  }
  for (int first = 1; first <= n; ++first) {
    for (const auto& t : pool(first)) {
      cur.push_back(t);
      sequences(n - first, min_parts, pool, cur, emit);
      cur.pop_back();
    }
  }
}

const std::vector<PaintedTree>& painted_trees(int n);

const std::vector<PaintedTree>& painted_trees(int n) {
  static std::map<int, std::vector<PaintedTree>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<PaintedTree> out;
  std::vector<PaintedTree> cur;
  sequences(n, 1, unpainted_trees, cur, [&](const std::vector<PaintedTree>& kids) { out.push_back({Kind::T, kids}); });
  if (n >= 2) {
    // a P node's children each have fewer leaves, so the recursion terminates
    std::function<const std::vector<PaintedTree>&(int)> smaller = [n](int m) -> const std::vector<PaintedTree>& {
      static const std::vector<PaintedTree> none;
      return m < n ? painted_trees(m) : none;
    };
    sequences(n, 2, smaller, cur, [&](const std::vector<PaintedTree>& kids) { out.push_back({Kind::P, kids}); });
  }
  return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace

std::vector<PaintedTree> enumerate_painted_trees(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_painted_trees needs n >= 1");
  return painted_trees(n);
}

int painted_dimension(const PaintedTree& t) {
  if (t.is_leaf()) return 0;
  int d = static_cast<int>(t.children.size()) - (t.kind == Kind::T ? 1 : 2);
  for (const auto& c : t.children) d += painted_dimension(c);
  return d;
}

namespace {

void number_edges(const PaintedTree& t, int& next, std::vector<int>& out) {
  for (const auto& c : t.children) {
    int id = next++;
    if (!c.is_leaf()) out.push_back(id);
    number_edges(c, next, out);
  }
}

Kind merged(Kind a, Kind b) {
  if (a == Kind::T || b == Kind::T) return Kind::T;
  if (a == Kind::P || b == Kind::P) return Kind::P;
  return Kind::U;
}

// preorder numbering matches number_edges: an edge's id is taken before its subtree
PaintedTree contract(const PaintedTree& t, int& next, const std::set<int>& edges) {
  PaintedTree out{t.kind, {}};
  std::function<void(const PaintedTree&)> absorb = [&](const PaintedTree& node) {
    for (const auto& c : node.children) {
      int id = next++;
      if (c.is_leaf()) {
        out.children.push_back(c);
      } else if (edges.count(id)) {
        out.kind = merged(out.kind, c.kind);
        absorb(c);
      } else {
        out.children.push_back(contract(c, next, edges));
      }
    }
  };
  absorb(t);
  return out;
}

}  // namespace

std::vector<int> internal_edges(const PaintedTree& t) {
  std::vector<int> out;
  int next = 0;
  number_edges(t, next, out);
  return out;
}

std::optional<PaintedTree> collapse_edges(const PaintedTree& t, const std::set<int>& edges) {
  auto internal = internal_edges(t);
  for (int e : edges)
    if (!std::binary_search(internal.begin(), internal.end(), e))
      throw std::invalid_argument("edge " + std::to_string(e) + " is not an internal edge of " + to_string(t));
  int next = 0;
  PaintedTree out = contract(t, next, edges);
  if (!is_valid(out)) return std::nullopt;
  return out;
}

poset::FacePoset build_Jtree(int n) {
  if (n < 1) throw std::invalid_argument("build_Jtree needs n >= 1");
  const auto& all = painted_trees(n);
  std::vector<poset::Element> elements;
  std::map<std::string, poset::Index> index;
  for (const auto& t : all) {
    index.emplace(to_string(t), elements.size());
    elements.push_back({to_string(t), painted_dimension(t)});
  }
  poset::Relation rel;
  for (const auto& t : all) {
    auto internal = internal_edges(t);
    const poset::Index from = index.at(to_string(t));
    for (std::size_t mask = 1; mask < (std::size_t{1} << internal.size()); ++mask) {
      std::set<int> chosen;
      for (std::size_t i = 0; i < internal.size(); ++i)
        if (mask >> i & 1) chosen.insert(internal[i]);
      if (auto c = collapse_edges(t, chosen)) rel.emplace_back(from, index.at(to_string(*c)));
    }
  }
  return poset::FacePoset::build(elements, rel);
}

}  // namespace assoc::multiplihedron
