#include "assoc/multiplihedron.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "assoc/associahedron.hpp"

namespace assoc::multiplihedron {

using associahedron::Bracket;
using associahedron::Bracketing;
using poset::FacePoset;
using poset::Index;

namespace {

Factor domain(const PaintedTree& t, int& next) {
  if (t.is_leaf()) return Factor::letter(++next);
  std::vector<Factor> parts;
  for (const auto& c : t.children) parts.push_back(domain(c, next));
  return Factor::bracket(std::move(parts));
}

Term codomain(const PaintedTree& t, int& next) {
  if (t.kind == Kind::T) {
    std::vector<Factor> args;
    for (const auto& c : t.children) args.push_back(domain(c, next));
    return Term::of(args.size() == 1 ? Block::word(std::move(args)) : Block::dots(std::move(args)));
  }
  std::vector<Term> parts;
  for (const auto& c : t.children) parts.push_back(codomain(c, next));
  return Term::product(std::move(parts));
}

template <class E>
FacePoset order_by_moves(const std::vector<E>& all) {
  std::vector<std::string> ids;
  std::map<std::string, Index> index;
  for (const auto& e : all) {
    index.emplace(to_string(e), ids.size());
    ids.push_back(to_string(e));
  }
  poset::Relation rel;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& c : coarsenings(all[i])) {
      auto it = index.find(to_string(c));
      if (it == index.end()) throw std::logic_error("move left the grammar: " + ids[i] + " -> " + to_string(c));
      rel.emplace_back(i, it->second);
    }
  return FacePoset::build_by_height(std::move(ids), rel);
}

std::string sizes(std::size_t a, std::size_t b) { return std::to_string(a) + " = " + std::to_string(b); }

}  // namespace

Expression Phi(const PaintedTree& t) {
  validate(t);
  int next = 0;
  return {codomain(t, next)};
}

FacePoset build_frakJ(int n) { return order_by_moves(enumerate_expressions(n)); }

FacePoset build_Jprime(int n) { return order_by_moves(enumerate_flat_expressions(n)); }

Report verify_Phi(int n) {
  Report r("phi n=" + std::to_string(n));
  FacePoset trees = build_Jtree(n);
  FacePoset exprs = build_frakJ(n);
  auto iso = poset::check_order_iso(trees, exprs, [](const std::string& s) {
    return to_string(Phi(parse_painted_tree(s)));
  });
  r.fact("painted_trees", static_cast<long long>(trees.size()));
  r.fact("expressions", static_cast<long long>(exprs.size()));
  r.summary = sizes(trees.size(), exprs.size());
  if (!iso.pass) r.fail(iso.witness);
  auto top = exprs.top();
  std::string expected = to_string(Phi(painted_corolla(n)));
  if (!top || exprs.id(*top) != expected) r.fail("greatest expression is not " + expected);
  return r;
}

Bracketing phi_map(const FlatExpression& e) {
  const int n = letters(e);
  std::vector<Bracket> out;
  std::function<void(const Factor&)> factor = [&](const Factor& f) {
    if (f.is_atom()) return;
    out.push_back({f.first(), f.last()});
    for (const auto& p : f.parts) factor(p);
  };
  for (std::size_t i = 0; i < e.blocks.size(); ++i) {
    const Block& b = e.blocks[i];
    if (!b.dotted && b.items.size() >= 2) out.push_back({b.first(), b.last()});
    for (const auto& f : b.items) factor(f);
    if (i > 0) out.push_back({b.first(), n + 1});
  }
  return Bracketing(n + 1, std::move(out));
}

FlatExpression phi_inverse(const Bracketing& b) {
  const int n = b.letters() - 1;
  if (n < 1) throw std::invalid_argument("phi_inverse needs at least two letters");
  std::vector<int> starts{1};
  std::vector<Bracket> inside;
  for (const auto& x : b.brackets()) {
    if (x.r == n + 1) starts.push_back(x.l);
    else inside.push_back(x);
  }
  // brackets are sorted outer-first, so each factor's sub-brackets follow it
  std::size_t next = 0;
  std::function<Factor(int, int)> factor = [&](int lo, int hi) -> Factor {
    if (lo == hi) return Factor::letter(lo);
    std::vector<Factor> parts;
    int at = lo;
    while (at <= hi) {
      if (next < inside.size() && inside[next].l == at && inside[next].r <= hi) {
        Bracket x = inside[next++];
        parts.push_back(factor(x.l, x.r));
        at = x.r + 1;
      } else {
        parts.push_back(Factor::letter(at++));
      }
    }
    return Factor::bracket(std::move(parts));
  };
  FlatExpression e;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    int lo = starts[i];
    int hi = i + 1 < starts.size() ? starts[i + 1] - 1 : n;
    if (lo == hi) {
      e.blocks.push_back(Block::word({Factor::letter(lo)}));
    } else if (next < inside.size() && inside[next].l == lo && inside[next].r == hi) {
      ++next;
      e.blocks.push_back(Block::word(factor(lo, hi).parts));
    } else {
      Factor whole = factor(lo, hi);
      e.blocks.push_back(Block::dots(std::move(whole.parts)));
    }
  }
  return e;
}

Report verify_phi(int n) {
  Report r("phiprime n=" + std::to_string(n));
  FacePoset flat = build_Jprime(n);
  FacePoset k = associahedron::build_K(n + 1);
  auto iso = poset::check_order_iso(flat, k, [](const std::string& s) {
    return associahedron::to_string(phi_map(parse_flat_expression(s)));
  });
  r.fact("collapsed", static_cast<long long>(flat.size()));
  r.fact("K_n+1", static_cast<long long>(k.size()));
  r.summary = sizes(flat.size(), k.size());
  if (!iso.pass) r.fail(iso.witness);
  if (poset::f_vector(flat) != poset::f_vector(k)) r.fail("f-vectors differ");

  std::size_t round_trips = 0;
  for (const auto& id : flat.ids()) {
    auto e = parse_flat_expression(id);
    if (to_string(phi_inverse(phi_map(e))) == id) ++round_trips;
    else r.fail("phi_inverse does not undo phi_map on " + id);
  }
  r.fact("round_trips", static_cast<long long>(round_trips));

  auto top = flat.top();
  if (!top || !phi_map(parse_flat_expression(flat.id(*top))).brackets().empty()) r.fail("top does not map to top");

  FacePoset full = build_frakJ(n);
  for (Index x = 0; x < full.size(); ++x)
    for (Index y : full.upper_covers(x)) {
      Index fx = flat.at(to_string(collapse_codomain(parse_expression(full.id(x)))));
      Index fy = flat.at(to_string(collapse_codomain(parse_expression(full.id(y)))));
      if (!flat.leq(fx, fy)) r.fail("collapse is not monotone on " + full.id(x) + " <= " + full.id(y));
    }
  return r;
}

}  // namespace assoc::multiplihedron
