#include <doctest.h>

#include <set>

#include "assoc/associahedron.hpp"
#include "assoc/exact_lp.hpp"
#include "assoc/trees.hpp"
#include "oracles.hpp"

using namespace assoc::associahedron;
using assoc::poset::f_vector;

namespace {

std::set<std::pair<int, int>> as_pairs(const Bracketing& b) {
  std::set<std::pair<int, int>> out;
  for (const auto& x : b.brackets()) out.emplace(x.l, x.r);
  return out;
}

// deletion of a letter on letter sets, renumbering the survivors
std::set<std::pair<int, int>> delete_letter(int n, const std::set<std::pair<int, int>>& b, int j) {
  std::set<std::pair<int, int>> out;
  for (auto [l, r] : b) {
    std::vector<int> kept;
    for (int x = l; x <= r; ++x)
      if (x != j) kept.push_back(x < j ? x : x - 1);
    if (kept.size() >= 2 && !(kept.front() == 1 && kept.back() == n - 1)) out.emplace(kept.front(), kept.back());
  }
  return out;
}

}  // namespace

TEST_CASE("bracketing text round trip") {
  for (const char* text : {"a1a2", "(a1a2)a3", "a1(a2a3)a4", "((a1a2)a3)a4", "(a1a2)(a3a4)", "a1((a2a3)a4)a5"}) {
    CHECK(to_string(parse_bracketing(text)) == text);
    CHECK(bracketing_from_json(to_json(parse_bracketing(text))) == parse_bracketing(text));
  }
  CHECK_THROWS(parse_bracketing("(a1a2a3)"));
  CHECK_THROWS(parse_bracketing("a1()a2"));
  CHECK_THROWS(parse_bracketing("a2a1"));
  CHECK_THROWS(parse_bracketing("((a1a2))a3"));
  CHECK_THROWS(parse_bracketing("(a1a2"));
  CHECK_THROWS(Bracketing(4, {{1, 3}, {2, 4}}));
  CHECK_THROWS(Bracketing(4, {{1, 4}}));
  CHECK_THROWS(Bracketing(4, {{2, 2}}));
  CHECK_THROWS(Bracketing(4, {{2, 3}, {2, 3}}));
}

TEST_CASE("bracketings agree with a brute-force enumeration") {
  for (int n = 2; n <= 7; ++n) {
    CAPTURE(n);
    auto ours = enumerate_bracketings(n);
    auto brute = oracle::bracketings(n);
    std::set<std::set<std::pair<int, int>>> a, b(brute.begin(), brute.end());
    for (const auto& x : ours) a.insert(as_pairs(x));
    CHECK(a.size() == ours.size());
    CHECK(a == b);
    CHECK(ours.size() == oracle::little_schroder(n));
  }
}

TEST_CASE("vertex and facet counts of K_n") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    auto k = build_K(n);
    auto f = f_vector(k);
    CHECK(f.front() == oracle::catalan(n - 1));
    CHECK(k.dimension() == n - 2);
    CHECK(k.top().has_value());
    if (n >= 3) CHECK(f[static_cast<std::size_t>(n - 3)] == oracle::binomial(n, 2) - 1);
  }
  CHECK(f_vector(build_K(5)) == std::vector<std::size_t>{14, 21, 9, 1});
  CHECK(f_vector(build_K(6)) == std::vector<std::size_t>{42, 84, 56, 14, 1});
}

TEST_CASE("K_n order is reverse inclusion of bracket sets") {
  auto k = build_K(5);
  for (std::size_t a = 0; a < k.size(); ++a)
    for (std::size_t b = 0; b < k.size(); ++b) {
      auto sa = as_pairs(parse_bracketing(k.id(a)));
      auto sb = as_pairs(parse_bracketing(k.id(b)));
      bool contains = std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
      CHECK(k.leq(a, b) == contains);
    }
  CHECK(assoc::poset::is_simple(build_K(6)));
}

TEST_CASE("facet signatures") {
  auto b = parse_bracketing("a1(a2a3)a4");
  CHECK(facet_signature(b) == FacetSignature{3, 2, 2});
  CHECK(facet_signature(parse_bracketing("(a1a2a3)a4")) == FacetSignature{2, 3, 1});
  for (int n = 3; n <= 8; ++n) {
    int count = 0;
    for (int q = 2; q <= n - 1; ++q)
      for (int r = 1; r <= n + 1 - q; ++r) {
        FacetSignature s{n + 1 - q, q, r};
        Bracketing one(n, {facet_bracket(n, s)});
        CHECK(facet_signature(one) == s);
        ++count;
      }
    CHECK(count == static_cast<int>(oracle::binomial(n, 2)) - 1);
  }
  CHECK_THROWS(facet_signature(parse_bracketing("a1a2a3")));
  CHECK_THROWS(facet_bracket(4, {2, 2, 1}));
}

TEST_CASE("embed") {
  auto two = Bracketing::empty(2);
  CHECK(to_string(embed(two, 1, two)) == "(a1a2)a3");
  CHECK(to_string(embed(two, 2, two)) == "a1(a2a3)");
  CHECK(to_string(embed(parse_bracketing("(a1a2)a3"), 3, parse_bracketing("a1(a2a3)"))) == "(a1a2)(a3(a4a5))");
  CHECK_THROWS(embed(two, 3, two));
}

TEST_CASE("degeneracy agrees with deletion on letter sets") {
  for (int n = 3; n <= 7; ++n)
    for (const auto& b : enumerate_bracketings(n))
      for (int j = 1; j <= n; ++j) CHECK(as_pairs(degeneracy(b, j)) == delete_letter(n, as_pairs(b), j));
  CHECK(to_string(degeneracy(parse_bracketing("(a1a2)a3"), 1)) == "a1a2");
  CHECK(to_string(degeneracy(parse_bracketing("((a1a2)a3)a4"), 4)) == "(a1a2)a3");
}

TEST_CASE("right comb and suffix part") {
  CHECK(to_string(right_comb_vertex(4)) == "a1(a2(a3a4))");
  CHECK(to_string(right_comb_vertex(2)) == "a1a2");
  CHECK(to_string(suffix_part(parse_bracketing("((a1a2)a3)(a4a5)"))) == "a1a2a3(a4a5)");
}

TEST_CASE("enlarged complex") {
  CHECK(enlarged_complex(1).empty());
  CHECK(f_vector(enlarged_complex(2).cells()) == std::vector<std::size_t>{1});
  CHECK(f_vector(enlarged_complex(3).cells()) == std::vector<std::size_t>{4, 3});
  CHECK(f_vector(enlarged_complex(4).cells()) == std::vector<std::size_t>{13, 18, 6});
}

TEST_CASE("Loday points are extreme: Caratheodory oracle") {
  for (int n = 3; n <= 5; ++n) {
    auto pts = loday_realization(n);
    std::vector<std::vector<oracle::Rational>> q;
    for (const auto& p : pts) q.emplace_back(p.begin(), p.end());
    for (std::size_t i = 0; i < q.size(); ++i) {
      auto rest = q;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      CHECK_FALSE(oracle::in_hull_by_subsets(q[i], rest));
      CHECK(assoc::exact::is_extreme(i, [&] {
        std::vector<assoc::exact::Vector> v;
        for (const auto& p : pts) v.push_back(assoc::exact::to_rational(p));
        return v;
      }()));
    }
  }
}

TEST_CASE("exact hull membership") {
  using assoc::exact::Vector;
  std::vector<Vector> square{{0, 0}, {2, 0}, {0, 2}, {2, 2}};
  CHECK(assoc::exact::in_convex_hull({1, 1}, square));
  CHECK(assoc::exact::in_convex_hull({2, 1}, square));
  CHECK_FALSE(assoc::exact::in_convex_hull({3, 1}, square));
  CHECK_FALSE(assoc::exact::in_convex_hull({assoc::exact::Rational(1, 3), -1}, square));
  std::vector<Vector> with_mid = square;
  with_mid.push_back({1, 1});
  CHECK_FALSE(assoc::exact::is_extreme(4, with_mid));
  CHECK(assoc::exact::is_extreme(0, with_mid));
  for (int n = 3; n <= 5; ++n) {
    auto pts = loday_realization(n);
    std::vector<std::vector<oracle::Rational>> q;
    for (const auto& p : pts) q.emplace_back(p.begin(), p.end());
    std::vector<oracle::Rational> centre(q.front().size(), 0);
    for (const auto& p : q)
      for (std::size_t i = 0; i < p.size(); ++i) centre[i] += p[i] / static_cast<long long>(q.size());
    CHECK(oracle::in_hull_by_subsets(centre, q));
    CHECK(assoc::exact::in_convex_hull(centre, q));
  }
}

TEST_CASE("cone construction and product cones") {
  for (int n = 2; n <= 6; ++n) {
    auto r = verify_theorem_A(n);
    CAPTURE(render_text(r));
    CHECK(r.pass);
  }
  for (int p = 2; p <= 5; ++p)
    for (int q = 2; p + q <= 7; ++q) {
      CHECK(verify_Q(p, q).pass);
      CHECK(verify_cross_cone_Q(p, q).pass);
    }
  auto pts = verify_cross_cone_points();
  CHECK(pts.pass);
}

TEST_CASE("Loday realization and identities") {
  for (int n = 2; n <= 6; ++n) CHECK(verify_loday(n, n <= 5).pass);
  CHECK(verify_operator_identities(6).pass);
  CHECK(verify_degeneracy_relations(5).pass);
}
