#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "assoc/associahedron.hpp"
#include "assoc/complex.hpp"
#include "assoc/cubeahedron.hpp"
#include "assoc/models.hpp"
#include "assoc/painted_tree.hpp"
#include "assoc/poset_io.hpp"

using namespace assoc::poset;
namespace ah = assoc::associahedron;

namespace {

std::vector<std::size_t> fv(const FacePoset& p) { return f_vector(p); }
using F = std::vector<std::size_t>;

CellComplex point_complex(const std::string& id = "pt") { return as_complex(FacePoset::build({{id, 0}}, {})); }

CellComplex edge_complex() {
  return as_complex(FacePoset::build({{"u", 0}, {"v", 0}, {"e", 1}}, {{0, 2}, {1, 2}}));
}

// square: vertices 0..3, edges 4..7 (i -- i+1), face 8
CellComplex square_complex() {
  std::vector<Element> el;
  for (int i = 0; i < 4; ++i) el.push_back({"v" + std::to_string(i), 0});
  for (int i = 0; i < 4; ++i) el.push_back({"e" + std::to_string(i), 1});
  el.push_back({"sq", 2});
  Relation rel;
  for (Index i = 0; i < 4; ++i) {
    rel.emplace_back(i, 4 + i);
    rel.emplace_back((i + 1) % 4, 4 + i);
    rel.emplace_back(4 + i, 8);
  }
  return as_complex(FacePoset::build(el, rel));
}

}  // namespace

TEST_CASE("close_order closes and keeps covers") {
  auto single = close_order({"x"}, {});
  CHECK(single.size() == 1);
  CHECK(single.leq(0, 0));
  CHECK(single.cover_count() == 0);

  auto chain = close_order({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(chain.leq(chain.at("a"), chain.at("c")));
  CHECK_FALSE(chain.leq(chain.at("c"), chain.at("a")));
  CHECK(chain.cover_count() == 2);

  auto k3 = ah::build_K(3);
  CHECK(k3.size() == 3);
  CHECK(k3.cover_count() == 2);
  CHECK(k3.minimal().size() == 2);
  CHECK(k3.top().has_value());
}

TEST_CASE("close_order reports the cycle it finds") {
  try {
    close_order({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    FAIL("cycle accepted");
  } catch (const CycleError& e) {
    std::set<std::string> seen(e.cycle().begin(), e.cycle().end());
    CHECK(seen == std::set<std::string>{"a", "b", "c"});
  }
  CHECK_THROWS_AS(close_order({"a", "a"}, {}), std::invalid_argument);
}

TEST_CASE("redundant generators are reduced to covers") {
  auto p = close_order({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(p.cover_count() == 2);
  CHECK(p.upper_covers(p.at("a")) == std::vector<Index>{p.at("b")});
}

TEST_CASE("f_vector on small models") {
  CHECK(fv(ah::build_K(2)) == F{1});
  CHECK(fv(ah::build_K(4)) == F{5, 5, 1});
  CHECK(fv(assoc::multiplihedron::build_Jtree(3)) == F{6, 6, 1});
}

TEST_CASE("gradedness is enforced") {
  // c covers b but shares its rank
  CHECK_THROWS_AS(FacePoset::build({{"a", 0}, {"b", 1}, {"c", 1}}, {{0, 1}, {1, 2}}), GradingError);
  CHECK_THROWS_AS(FacePoset::build({{"a", 1}}, {}), GradingError);
  CHECK_THROWS_AS(FacePoset::build_by_height({"a", "b", "c", "d", "e"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}),
                  GradingError);
  auto diamond = FacePoset::build_by_height({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {0, 3}, {3, 2}, {0, 2}});
  CHECK(diamond.rank(2) == 2);
  auto ok = FacePoset::build_by_height({"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(ok.rank(2) == 2);
}

TEST_CASE("check_order_iso") {
  auto k4 = ah::build_K(4);
  std::vector<Index> id(k4.size());
  for (Index i = 0; i < id.size(); ++i) id[i] = i;
  CHECK(check_order_iso(k4, k4, id).pass);

  auto k3 = ah::build_K(3);
  std::vector<Index> constant(k3.size(), 0);
  auto r = check_order_iso(k3, k3, constant);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witness.empty());

  // swapping a vertex with the top keeps sizes but breaks ranks
  std::vector<Index> m(3);
  for (Index i = 0; i < 3; ++i) m[i] = i;
  std::swap(m[*k3.top()], m[k3.of_rank(0)[0]]);
  CHECK_FALSE(check_order_iso(k3, k3, m).pass);
}

TEST_CASE("check_order_iso tests both directions of the order") {
  // same elements, one more relation on the target side
  auto p = FacePoset::build({{"x", 0}, {"y", 0}, {"z", 1}}, {{0, 2}});
  auto q = FacePoset::build({{"x", 0}, {"y", 0}, {"z", 1}}, {{0, 2}, {1, 2}});
  CHECK_FALSE(check_order_iso(p, q, std::vector<Index>{0, 1, 2}).pass);
  CHECK_FALSE(check_order_iso(q, p, std::vector<Index>{0, 1, 2}).pass);
}

TEST_CASE("search_iso") {
  auto k3 = ah::build_K(3);
  auto m = search_iso(k3, k3);
  REQUIRE(m.has_value());
  CHECK(check_order_iso(k3, k3, *m).pass);

  auto k4 = ah::build_K(4);
  auto j3 = assoc::multiplihedron::build_Jtree(3);
  CHECK_FALSE(search_iso(k4, j3).has_value());

  auto base = ah::enlarged_complex(3);
  auto cone = cone_complex(base, ah::suffix_key());
  std::vector<std::pair<Index, Index>> anchors{{cone.cells().at(kConeApex), k4.at("a1(a2(a3a4))")}};
  auto found = search_iso(cone.cells(), k4, anchors);
  REQUIRE(found.has_value());
  CHECK((*found)[cone.cells().at(kConeApex)] == k4.at("a1(a2(a3a4))"));

  // deterministic across runs
  CHECK(search_iso(cone.cells(), k4, anchors) == found);
}

TEST_CASE("search_iso agrees with check_order_iso on every model pair") {
  for (int n = 2; n <= 5; ++n) {
    auto k = ah::build_K(n + 1);
    auto jp = assoc::build_model("jprime", n);
    auto m = search_iso(jp, k);
    REQUIRE(m.has_value());
    CHECK(check_order_iso(jp, k, *m).pass);
  }
  for (int n = 1; n <= 3; ++n) {
    auto cp = assoc::cubeahedron::build_CP(n);
    auto k = ah::build_K(n + 2);
    auto m = search_iso(cp, k);
    REQUIRE(m.has_value());
    CHECK(check_order_iso(cp, k, *m).pass);
  }
  CHECK_FALSE(search_iso(ah::build_K(5), assoc::build_model("j", 3)).has_value());
}

TEST_CASE("boundary_subcomplex") {
  auto e = boundary_subcomplex(edge_complex());
  CHECK(e.size() == 2);
  CHECK(fv(e.cells()) == F{2});

  auto c = boundary_subcomplex(ah::enlarged_complex(3));
  CHECK(c.size() == 2);
  std::set<std::string> ends(c.cells().ids().begin(), c.cells().ids().end());
  CHECK(ends == std::set<std::string>{"a1((a2a3)a4)", "(a1a2)(a3a4)"});

  auto sq = boundary_subcomplex(square_complex());
  CHECK(fv(sq.cells()) == F{4, 4});

  auto impure = as_complex(FacePoset::build({{"u", 0}, {"v", 0}, {"e", 1}, {"w", 0}}, {{0, 2}, {1, 2}}));
  CHECK_THROWS_AS(boundary_subcomplex(impure), std::invalid_argument);
  CHECK(boundary_subcomplex(point_complex()).empty());
}

TEST_CASE("cone_complex") {
  auto interval = cone_complex(point_complex());
  CHECK(fv(interval.cells()) == F{2, 1});

  auto pentagon = cone_complex(ah::enlarged_complex(3));
  CHECK(pentagon.size() == 11);
  CHECK(fv(pentagon.cells()) == F{5, 5, 1});

  auto apex = cone_complex(CellComplex{});
  CHECK(apex.size() == 1);
  CHECK(apex.cells().id(0) == kConeApex);

  // the cone adds one cell per boundary cell plus apex and top
  for (const auto& c : {edge_complex(), square_complex(), ah::enlarged_complex(3), ah::enlarged_complex(4)}) {
    CHECK(cone_complex(c).size() == c.size() + boundary_subcomplex(c).size() + 2);
    CHECK(boundary_euler_characteristic(cone_complex(c).cells()) ==
          sphere_euler_characteristic(cone_complex(c).cells().dimension()));
  }
}

TEST_CASE("keyed cone merges boundary blocks") {
  auto base = ah::enlarged_complex(4);
  auto naive = cone_complex(base);
  auto keyed = cone_complex(base, ah::suffix_key());
  CHECK(naive.size() == 55);
  CHECK(keyed.size() == 45);
  CHECK(fv(keyed.cells()) == F{14, 21, 9, 1});
  // the identity key reproduces the naive cone
  auto same = cone_complex(base, [](const std::string& s) { return s; });
  CHECK(check_order_iso(same.cells(), naive.cells(), [](const std::string& s) { return s; }).pass);
}

TEST_CASE("product and union") {
  auto k4 = as_complex(ah::build_K(4));
  auto pk = product_complex(point_complex(), k4);
  CHECK(pk.size() == k4.size());
  CHECK(search_iso(pk.cells(), k4.cells()).has_value());

  auto interval = cone_complex(point_complex());
  auto square = product_complex(interval, interval);
  CHECK(fv(square.cells()) == F{4, 4, 1});

  auto lhs = product_complex(cone_complex(point_complex()), cone_complex(point_complex()));
  auto u = union_complex(product_complex(point_complex(), interval), product_complex(interval, point_complex()));
  CHECK(u.size() == 5);
  auto rhs = cone_complex(u);
  CHECK(lhs.size() == 9);
  CHECK(rhs.size() == 9);
  CHECK(search_iso(lhs.cells(), rhs.cells()).has_value());

  auto a = as_complex(FacePoset::build({{"x", 0}}, {}));
  auto b = as_complex(FacePoset::build({{"x", 1}, {"y", 0}}, {{1, 0}}));
  CHECK_THROWS_AS(union_complex(a, b), std::invalid_argument);

  CHECK(split_product_label(product_label("<a|b>", "c")) == std::pair<std::string, std::string>{"<a|b>", "c"});
}

TEST_CASE("product f-vector is the convolution of the factors") {
  for (int p = 2; p <= 5; ++p)
    for (int q = 2; q <= 5; ++q) {
      auto fp = fv(ah::build_K(p));
      auto fq = fv(ah::build_K(q));
      F conv(fp.size() + fq.size() - 1, 0);
      for (std::size_t i = 0; i < fp.size(); ++i)
        for (std::size_t j = 0; j < fq.size(); ++j) conv[i + j] += fp[i] * fq[j];
      auto prod = product_complex(as_complex(ah::build_K(p)), as_complex(ah::build_K(q)));
      CHECK(fv(prod.cells()) == conv);
    }
}

TEST_CASE("is_simple") {
  CHECK(is_simple(ah::build_K(5)));
  CHECK(is_simple(cone_complex(point_complex()).cells()));
  // square pyramid: apex lies in four triangles
  std::vector<Element> el;
  for (int i = 0; i < 5; ++i) el.push_back({"v" + std::to_string(i), 0});
  for (int i = 0; i < 4; ++i) el.push_back({"b" + std::to_string(i), 1});
  for (int i = 0; i < 4; ++i) el.push_back({"s" + std::to_string(i), 1});
  for (int i = 0; i < 4; ++i) el.push_back({"t" + std::to_string(i), 2});
  el.push_back({"base", 2});
  el.push_back({"solid", 3});
  Relation rel;
  for (Index i = 0; i < 4; ++i) {
    rel.emplace_back(i, 5 + i);
    rel.emplace_back((i + 1) % 4, 5 + i);
    rel.emplace_back(i, 9 + i);
    rel.emplace_back(4, 9 + i);
    rel.emplace_back(5 + i, 13 + i);
    rel.emplace_back(9 + i, 13 + i);
    rel.emplace_back(9 + (i + 1) % 4, 13 + i);
    rel.emplace_back(5 + i, 17);
    rel.emplace_back(13 + i, 18);
  }
  rel.emplace_back(17, 18);
  auto pyramid = FacePoset::build(el, rel);
  CHECK(fv(pyramid) == F{5, 8, 5, 1});
  CHECK_FALSE(is_simple(pyramid));
}

TEST_CASE("JSON round trip and DOT export") {
  for (const auto& name : assoc::model_names()) {
    auto p = assoc::build_model(name, 3);
    auto back = face_poset_from_json(to_json(p));
    CHECK(back.ids() == p.ids());
    CHECK(back.covers() == p.covers());
  }
  auto count = [](const std::string& dot) {
    std::size_t edges = 0, nodes = 0;
    std::istringstream in(dot);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find("->") != std::string::npos) ++edges;
      else if (line.rfind("    \"", 0) == 0) ++nodes;
    }
    return std::pair{nodes, edges};
  };
  CHECK(count(to_dot(ah::build_K(3))) == std::pair<std::size_t, std::size_t>{3, 2});
  CHECK(count(to_dot(assoc::build_model("j", 3))) == std::pair<std::size_t, std::size_t>{13, 18});
  CHECK(count(to_dot(assoc::build_model("cp", 1))) == std::pair<std::size_t, std::size_t>{3, 2});
  CHECK(to_dot(ah::build_K(5)) == to_dot(ah::build_K(5)));
  CHECK_THROWS(face_poset_from_json(nlohmann::json::parse(R"({"elements":[{"id":"a","rank":0}],"covers":[["a","b"]]})")));
}

TEST_CASE("every model has the boundary of a sphere") {
  for (const auto& name : assoc::model_names())
    for (int n = assoc::model_min(name); n <= std::min(assoc::model_cap(name), 6); ++n) {
      auto p = assoc::build_model(name, n);
      CAPTURE(name);
      CAPTURE(n);
      CHECK(boundary_euler_characteristic(p) == sphere_euler_characteristic(p.dimension()));
      CHECK(assoc::verify_sphere(name, p).pass);
    }
}
