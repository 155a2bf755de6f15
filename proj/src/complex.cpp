#include "assoc/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace assoc::poset {

namespace {

CellComplex induced(const FacePoset& p, const Bits& keep) {
  std::vector<Element> elements;
  std::vector<Index> renumber(p.size(), static_cast<Index>(-1));
  for (auto v = keep.find_first(); v != Bits::npos; v = keep.find_next(v)) {
    renumber[v] = elements.size();
    elements.push_back({p.id(v), p.rank(v)});
  }
  // covers of a downward closed subset are covers of the ambient poset
  Relation rel;
  for (auto v = keep.find_first(); v != Bits::npos; v = keep.find_next(v))
    for (Index w : p.upper_covers(v))
      if (keep.test(w)) rel.emplace_back(renumber[v], renumber[w]);
  return CellComplex(FacePoset::build(elements, rel));
}

}  // namespace

CellComplex subcomplex(const FacePoset& p, const std::vector<Index>& generators) {
  Bits keep(p.size());
  for (Index g : generators) keep |= p.down_set(g);
  return induced(p, keep);
}

CellComplex boundary_subcomplex(const CellComplex& c) {
  const FacePoset& p = c.cells();
  if (p.empty()) return {};
  auto tops = c.top_cells();
  const int d = p.rank(tops.front());
  for (Index t : tops)
    if (p.rank(t) != d)
      throw std::invalid_argument("boundary of an impure complex: top cells " + p.id(tops.front()) +
                                  " and " + p.id(t) + " have different ranks");
  std::vector<Index> generators;
  for (Index v : p.of_rank(d - 1)) {
    std::size_t containing = 0;
    for (Index w : p.upper_covers(v))
      if (p.upper_covers(w).empty()) ++containing;
    if (containing == 1) generators.push_back(v);
  }
  return subcomplex(p, generators);
}

std::string cone_cell_label(const std::string& block) { return "cone{" + block + "}"; }

CellComplex cone_complex(const CellComplex& c, const BlockKey& key) {
  const FacePoset& p = c.cells();
  if (p.empty()) return CellComplex(FacePoset::build({{kConeApex, 0}}, {}));

  CellComplex boundary = boundary_subcomplex(c);
  const FacePoset& b = boundary.cells();
  const int d = p.rank(c.top_cells().front());

  std::vector<Element> elements;
  for (Index v = 0; v < p.size(); ++v) elements.push_back({p.id(v), p.rank(v)});
  const Index apex = elements.size();
  elements.push_back({kConeApex, 0});

  // one block per key value, in order of first appearance
  std::vector<std::string> block_of(b.size());
  std::map<std::string, Index> block_index;
  for (Index v = 0; v < b.size(); ++v) {
    block_of[v] = key ? key(b.id(v)) : b.id(v);
    auto [it, inserted] = block_index.emplace(block_of[v], elements.size());
    if (inserted) {
      elements.push_back({cone_cell_label(block_of[v]), b.rank(v) + 1});
    } else {
      auto& e = elements[it->second];
      e.rank = std::max(e.rank, b.rank(v) + 1);
    }
  }
  const Index top = elements.size();
  elements.push_back({kConeTop, d + 1});

  Relation rel = p.covers();
  for (const auto& [name, cell] : block_index) rel.emplace_back(apex, cell);
  for (Index v = 0; v < b.size(); ++v) {
    Index here = block_index.at(block_of[v]);
    rel.emplace_back(p.at(b.id(v)), here);
    for (Index w : b.upper_covers(v)) {
      Index there = block_index.at(block_of[w]);
      if (there != here) rel.emplace_back(here, there);
    }
  }
  for (Index t : c.top_cells()) rel.emplace_back(t, top);
  for (const auto& [name, cell] : block_index) rel.emplace_back(cell, top);
  rel.emplace_back(apex, top);
  return CellComplex(FacePoset::build(elements, rel));
}

BlockKey cone_carrier(const CellComplex& c, const BlockKey& key) {
  CellComplex boundary = boundary_subcomplex(c);
  std::set<std::string> on_boundary(boundary.cells().ids().begin(), boundary.cells().ids().end());
  return [on_boundary = std::move(on_boundary), key](const std::string& label) -> std::string {
    if (label == kConeApex) return "apex";
    if (label == kConeTop) return "top";
    if (label.rfind("cone{", 0) == 0 && label.back() == '}') return label.substr(5, label.size() - 6);
    if (on_boundary.count(label)) return key ? key(label) : label;
    return "top";
  };
}

std::string product_label(const std::string& a, const std::string& b) {
  return "<" + a + "|" + b + ">";
}

std::pair<std::string, std::string> split_product_label(const std::string& label) {
  if (label.size() < 3 || label.front() != '<' || label.back() != '>')
    throw std::invalid_argument("not a product label: " + label);
  // the separator is the '|' at nesting depth one
  int depth = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    char ch = label[i];
    if (ch == '<') ++depth;
    if (ch == '>') --depth;
    if (ch == '|' && depth == 1) return {label.substr(1, i - 1), label.substr(i + 1, label.size() - i - 2)};
  }
  throw std::invalid_argument("not a product label: " + label);
}

CellComplex product_complex(const CellComplex& a, const CellComplex& b) {
  const FacePoset& p = a.cells();
  const FacePoset& q = b.cells();
  if (p.empty() || q.empty()) return {};
  std::vector<Element> elements;
  elements.reserve(p.size() * q.size());
  for (Index x = 0; x < p.size(); ++x)
    for (Index y = 0; y < q.size(); ++y) elements.push_back({product_label(p.id(x), q.id(y)), p.rank(x) + q.rank(y)});
  auto at = [&](Index x, Index y) { return x * q.size() + y; };
  Relation rel;
  for (Index x = 0; x < p.size(); ++x) {
    for (Index y = 0; y < q.size(); ++y) {
      for (Index x2 : p.upper_covers(x)) rel.emplace_back(at(x, y), at(x2, y));
      for (Index y2 : q.upper_covers(y)) rel.emplace_back(at(x, y), at(x, y2));
    }
  }
  return CellComplex(FacePoset::build(elements, rel));
}

CellComplex union_complex(const CellComplex& a, const CellComplex& b) {
  const FacePoset& p = a.cells();
  const FacePoset& q = b.cells();
  std::vector<Element> elements;
  std::map<std::string, Index> index;
  auto add = [&](const FacePoset& src) {
    std::vector<Index> renumber(src.size());
    for (Index v = 0; v < src.size(); ++v) {
      auto [it, inserted] = index.emplace(src.id(v), elements.size());
      if (inserted) {
        elements.push_back({src.id(v), src.rank(v)});
      } else if (elements[it->second].rank != src.rank(v)) {
        throw std::invalid_argument("union clash: cell " + src.id(v) + " has ranks " +
                                    std::to_string(elements[it->second].rank) + " and " +
                                    std::to_string(src.rank(v)));
      }
      renumber[v] = it->second;
    }
    return renumber;
  };
  auto rp = add(p);
  auto rq = add(q);
  Relation rel;
  for (auto [v, w] : p.covers()) rel.emplace_back(rp[v], rp[w]);
  for (auto [v, w] : q.covers()) rel.emplace_back(rq[v], rq[w]);
  return CellComplex(FacePoset::build(elements, rel));
}

}  // namespace assoc::poset
