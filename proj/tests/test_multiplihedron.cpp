#include <doctest.h>

#include <functional>
#include <set>

#include "assoc/associahedron.hpp"
#include "assoc/multiplihedron.hpp"
#include "oracles.hpp"

using namespace assoc::multiplihedron;
using assoc::poset::f_vector;
using F = std::vector<std::size_t>;

namespace {

// compositions of n into `parts` parts (0 = at least one part)
void for_each_composition(int n, int min_parts, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      if (static_cast<int>(cur.size()) >= min_parts) fn(cur);
      return;
    }
    for (int k = 1; k <= left; ++k) {
      cur.push_back(k);
      rec(left - k);
      cur.pop_back();
    }
  };
  rec(n);
}

// all painted trees: U(n) unpainted subtrees, T(n) T-rooted, A(n) all
std::uint64_t painted_count(int n) {
  std::vector<std::uint64_t> u(static_cast<std::size_t>(n + 1)), t(u), a(u);
  for (int m = 1; m <= n; ++m) {
    u[static_cast<std::size_t>(m)] = oracle::little_schroder(m);
    for_each_composition(m, 1, [&](const std::vector<int>& c) {
      std::uint64_t prod = 1;
      for (int x : c) prod *= u[static_cast<std::size_t>(x)];
      t[static_cast<std::size_t>(m)] += prod;
    });
    a[static_cast<std::size_t>(m)] = t[static_cast<std::size_t>(m)];
    for_each_composition(m, 2, [&](const std::vector<int>& c) {
      std::uint64_t prod = 1;
      for (int x : c) prod *= a[static_cast<std::size_t>(x)];
      a[static_cast<std::size_t>(m)] += prod;
    });
  }
  return a[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("painted tree text and validity") {
  for (const char* text : {"(t *)", "(t * *)", "(t (u * *))", "(p (t *) (t *))", "(p (t (u * *)) (p (t *) (t * *)))"}) {
    CHECK(to_string(parse_painted_tree(text)) == text);
  }
  CHECK_THROWS(parse_painted_tree("(u * *)"));
  CHECK_THROWS(parse_painted_tree("(p * *)"));
  CHECK_THROWS(parse_painted_tree("(t)"));
  CHECK_THROWS(parse_painted_tree("(t (u *))"));
  CHECK_THROWS(parse_painted_tree("(p (t *))"));
  CHECK_THROWS(parse_painted_tree("(t (t *))"));
  CHECK_THROWS(parse_painted_tree("(x * *)"));
  CHECK_THROWS(parse_painted_tree("*"));
  CHECK(to_string(painted_corolla(3)) == "(t * * *)");
  CHECK(painted_dimension(painted_corolla(5)) == 4);
  CHECK(painted_dimension(parse_painted_tree("(p (t *) (t *))")) == 0);
}

TEST_CASE("painted tree counts against independent recurrences") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    auto all = enumerate_painted_trees(n);
    CHECK(all.size() == painted_count(n));
    std::size_t vertices = 0;
    std::set<std::string> seen;
    for (const auto& t : all) {
      CHECK(is_valid(t));
      CHECK(t.leaves() == n);
      if (painted_dimension(t) == 0) ++vertices;
      seen.insert(to_string(t));
    }
    CHECK(seen.size() == all.size());
    CHECK(vertices == oracle::painted_binary(n));
  }
  CHECK(painted_count(4) == 67);
}

TEST_CASE("J(n) face posets") {
  CHECK(build_Jtree(1).size() == 1);
  CHECK(f_vector(build_Jtree(2)) == F{2, 1});
  auto j3 = build_Jtree(3);
  CHECK(f_vector(j3) == F{6, 6, 1});
  CHECK(j3.cover_count() == 18);
  CHECK(f_vector(build_Jtree(4)) == F{21, 32, 13, 1});
  CHECK(f_vector(build_Jtree(5)) == F{80, 165, 110, 25, 1});
  for (int n = 1; n <= 5; ++n) {
    auto j = build_Jtree(n);
    CHECK(j.top().has_value());
    CHECK(j.id(*j.top()) == to_string(painted_corolla(n)));
    CHECK(f_vector(j).front() == oracle::painted_binary(n));
  }
}

TEST_CASE("collapsing edges") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& t : enumerate_painted_trees(n)) {
      auto edges = internal_edges(t);
      std::set<int> all(edges.begin(), edges.end());
      CHECK(collapse_edges(t, {}) == t);
      auto top = collapse_edges(t, all);
      REQUIRE(top.has_value());
      CHECK(*top == painted_corolla(n));
      for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
        std::set<int> pick;
        for (std::size_t i = 0; i < edges.size(); ++i)
          if (mask >> i & 1) pick.insert(edges[i]);
        if (auto c = collapse_edges(t, pick)) {
          CHECK(is_valid(*c));
          CHECK(painted_dimension(*c) >= painted_dimension(t));
        }
      }
    }
}

TEST_CASE("expression text") {
  for (const char* text : {"f(a1)", "f(a1a2)", "f(a1.a2)", "f(a1)f(a2)", "f(a1a2)(f(a3)f(a4.a5))",
                           "f((a1a2).(a3a4))f((a5a6).(a7a8).(a9a10))", "f(a1(a2a3))", "(f(a1)f(a2a3))f(a4)"}) {
    CHECK(to_string(parse_expression(text)) == text);
  }
  CHECK(to_string(parse_expression("f(a1·a2)")) == "f(a1.a2)");
  CHECK_THROWS(parse_expression("f(a1.a2a3)"));
  CHECK_THROWS(parse_expression("f((a1.a2)a3)"));
  CHECK_THROWS(parse_expression("f(a1.(a2.a3))"));
  CHECK(to_string(parse_expression("f((a1a2))")) == "f(a1a2)");
  CHECK_THROWS(parse_expression("f(a2)f(a1)"));
  CHECK_THROWS(parse_expression("(f(a1))f(a2)"));
  CHECK_THROWS(parse_expression("f(a1)("));
  CHECK_THROWS(parse_expression("a1a2"));
  CHECK(to_string(collapse_codomain(parse_expression("(f(a1)f(a2a3))f(a4)"))) == "f(a1)f(a2a3)f(a4)");
  CHECK(collapse_codomain(parse_expression("(f(a1)f(a2))f(a3)")) ==
        collapse_codomain(parse_expression("f(a1)(f(a2)f(a3))")));
  CHECK(to_string(collapse_codomain(parse_expression("f(a1.a2)"))) == "f(a1.a2)");
}

TEST_CASE("expression enumeration matches painted trees and bracketings") {
  for (int n = 1; n <= 5; ++n) {
    auto all = enumerate_expressions(n);
    CHECK(all.size() == painted_count(n));
    std::set<std::string> seen;
    for (const auto& e : all) {
      auto s = to_string(e);
      CHECK(parse_expression(s) == e);
      CHECK(letters(e) == n);
      seen.insert(s);
    }
    CHECK(seen.size() == all.size());
  }
  for (int n = 1; n <= 6; ++n) {
    auto flat = enumerate_flat_expressions(n);
    CHECK(flat.size() == oracle::little_schroder(n + 1));
    std::set<std::string> image;
    for (const auto& e : enumerate_expressions(std::min(n, 5))) image.insert(to_string(collapse_codomain(e)));
    if (n <= 5) CHECK(image.size() == flat.size());
  }
}

TEST_CASE("displayed coarsening examples") {
  auto frak = build_frakJ(4);
  auto below = [&](const char* a, const char* b) { return frak.less(frak.at(a), frak.at(b)); };
  CHECK(below("f(a1)f(a2.(a3a4))", "f(a1.a2.(a3a4))"));
  CHECK(below("f((a1a2)(a3a4))", "f((a1a2).(a3a4))"));
  CHECK(below("f(a1a2a3a4)", "f(a1.a2.a3.a4)"));
  CHECK(frak.id(*frak.top()) == "f(a1.a2.a3.a4)");
}

TEST_CASE("covers are single coarsening moves") {
  for (int n = 1; n <= 4; ++n) {
    auto frak = build_frakJ(n);
    for (auto [lo, hi] : frak.covers()) {
      auto moves = coarsenings(parse_expression(frak.id(lo)));
      CHECK(std::find(moves.begin(), moves.end(), parse_expression(frak.id(hi))) != moves.end());
    }
    auto jp = build_Jprime(n);
    for (auto [lo, hi] : jp.covers()) {
      auto moves = coarsenings(parse_flat_expression(jp.id(lo)));
      CHECK(std::find(moves.begin(), moves.end(), parse_flat_expression(jp.id(hi))) != moves.end());
    }
  }
}

TEST_CASE("Phi") {
  auto t = parse_painted_tree("(p (t (u * *)) (p (t *) (t * *)))");
  CHECK(to_string(Phi(t)) == "f(a1a2)(f(a3)f(a4.a5))");
  CHECK(to_string(Phi(painted_corolla(3))) == "f(a1.a2.a3)");
  CHECK(to_string(Phi(parse_painted_tree("(t (u * *))"))) == "f(a1a2)");
  for (int n = 1; n <= 5; ++n) {
    auto r = verify_Phi(n);
    CAPTURE(render_text(r));
    CHECK(r.pass);
  }
}

TEST_CASE("phi") {
  namespace ah = assoc::associahedron;
  CHECK(ah::to_string(phi_map(parse_flat_expression("f((a1a2).(a3a4))f((a5a6).(a7a8).(a9a10))"))) ==
        "(a1a2)(a3a4)((a5a6)(a7a8)(a9a10)a11)");
  CHECK(ah::to_string(phi_map(parse_flat_expression("f(a1.a2.a3.a4)"))) == "a1a2a3a4a5");
  CHECK(ah::to_string(phi_map(parse_flat_expression("f(a1)f(a2)"))) == "a1(a2a3)");
  CHECK(f_vector(build_Jprime(1)) == F{1});
  CHECK(f_vector(build_Jprime(2)) == F{2, 1});
  CHECK(f_vector(build_Jprime(3)) == F{5, 5, 1});
  for (int n = 1; n <= 6; ++n) {
    CHECK(f_vector(build_Jprime(n)) == f_vector(ah::build_K(n + 1)));
    for (const auto& b : ah::enumerate_bracketings(n + 1)) CHECK(phi_map(phi_inverse(b)) == b);
    auto r = verify_phi(n);
    CAPTURE(render_text(r));
    CHECK(r.pass);
  }
}
