#include "assoc/associahedron.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "assoc/exact_lp.hpp"
#include "assoc/trees.hpp"

namespace assoc::associahedron {

using poset::CellComplex;
using poset::Element;
using poset::FacePoset;
using poset::Index;
using poset::Relation;

FacePoset build_K(int n) {
  if (n < 2) throw std::invalid_argument("build_K needs n >= 2");
  auto faces = enumerate_bracketings(n);
  std::vector<Element> elements;
  std::map<Bracketing, Index> index;
  for (const auto& b : faces) {
    index.emplace(b, elements.size());
    elements.push_back({to_string(b), b.dimension()});
  }
  Relation rel;
  for (const auto& b : faces)
    for (const auto& x : b.brackets()) rel.emplace_back(index.at(b), index.at(b.without(x)));
  return FacePoset::build(elements, rel);
}

FacetSignature facet_signature(const Bracketing& b) {
  if (b.size() != 1) throw std::invalid_argument("facet_signature needs exactly one bracket, got " + to_string(b));
  const Bracket& x = b.brackets().front();
  return {b.letters() - (x.r - x.l), x.r - x.l + 1, x.l};
}

Bracket facet_bracket(int n, const FacetSignature& s) {
  if (s.p + s.q != n + 1 || s.q < 2 || s.q > n - 1 || s.r < 1 || s.r > s.p)
    throw std::invalid_argument("invalid facet signature for n = " + std::to_string(n));
  return {s.r, s.r + s.q - 1};
}

Bracketing embed(const Bracketing& outer, int k, const Bracketing& inner) {
  const int p = outer.letters();
  const int q = inner.letters();
  if (k < 1 || k > p) throw std::out_of_range("slot " + std::to_string(k) + " out of range 1.." + std::to_string(p));
  if (p < 2 || q < 2) throw std::invalid_argument("embed needs at least two letters on each side");
  std::vector<Bracket> out;
  for (const auto& x : outer.brackets()) out.push_back({x.l <= k ? x.l : x.l + q - 1, x.r < k ? x.r : x.r + q - 1});
  out.push_back({k, k + q - 1});
  for (const auto& x : inner.brackets()) out.push_back({x.l + k - 1, x.r + k - 1});
  return Bracketing(p + q - 1, std::move(out));
}

Bracketing degeneracy(const Bracketing& b, int j) {
  const int n = b.letters();
  if (j < 1 || j > n) throw std::out_of_range("degeneracy index " + std::to_string(j) + " out of range");
  if (n < 3) throw std::invalid_argument("degeneracy needs at least three letters");
  std::set<std::pair<int, int>> kept;
  for (const auto& x : b.brackets()) {
    int l = x.l < j ? x.l : (x.l == j ? x.l : x.l - 1);
    int r = x.r < j ? x.r : x.r - 1;
    if (r > l && !(l == 1 && r == n - 1)) kept.emplace(l, r);
  }
  std::vector<Bracket> out;
  for (auto [l, r] : kept) out.push_back({l, r});
  return Bracketing(n - 1, std::move(out));
}

Bracketing right_comb_vertex(int n) {
  std::vector<Bracket> out;
  for (int i = 2; i < n; ++i) out.push_back({i, n});
  return Bracketing(n, std::move(out));
}

Bracketing suffix_part(const Bracketing& b) {
  std::vector<Bracket> out;
  for (const auto& x : b.brackets())
    if (x.r == b.letters()) out.push_back(x);
  return Bracketing(b.letters(), std::move(out));
}

CellComplex enlarged_complex(int n) {
  if (n < 1) throw std::invalid_argument("enlarged_complex needs n >= 1");
  FacePoset k = build_K(n + 1);
  std::vector<Index> facets;
  for (Index v : k.of_rank(k.dimension() - 1)) {
    auto b = parse_bracketing(k.id(v));
    if (b.brackets().front().r <= n) facets.push_back(v);
  }
  return poset::subcomplex(k, facets);
}

poset::BlockKey suffix_key() {
  return [](const std::string& label) { return to_string(suffix_part(parse_bracketing(label))); };
}

namespace {

// cone cells are named after the face of K they stand for
std::string cone_image(const std::string& label, const std::string& apex, const std::string& top) {
  if (label == poset::kConeApex) return apex;
  if (label == poset::kConeTop) return top;
  if (label.rfind("cone{", 0) == 0) return label.substr(5, label.size() - 6);
  return label;
}

std::string sizes(std::size_t a, std::size_t b) { return std::to_string(a) + " = " + std::to_string(b); }

void iso_by_search(Report& r, const FacePoset& p, const FacePoset& q, const std::vector<std::pair<std::string, std::string>>& anchors) {
  std::vector<std::pair<Index, Index>> idx;
  for (const auto& [a, b] : anchors) {
    auto x = p.find(a);
    auto y = q.find(b);
    if (!x || !y) {
      r.fail("anchor " + a + " -> " + b + " is not available");
      return;
    }
    idx.emplace_back(*x, *y);
  }
  auto m = poset::search_iso(p, q, idx);
  r.fact("search_iso", m ? "found" : "none");
  if (!m) r.fail("no order isomorphism extends the anchors");
}

}  // namespace

Report verify_theorem_A(int n) {
  Report r("theorem_A n=" + std::to_string(n));
  if (n < 2) throw std::invalid_argument("verify_theorem_A needs n >= 2");
  FacePoset k = build_K(n);
  CellComplex base = enlarged_complex(n - 1);
  CellComplex cone = poset::cone_complex(base, suffix_key());
  CellComplex naive = poset::cone_complex(base);
  const std::string apex = to_string(right_comb_vertex(n));
  const std::string top = to_string(Bracketing::empty(n));
  r.fact("K_n", static_cast<long long>(k.size()));
  r.fact("enlarged", static_cast<long long>(base.size()));
  r.fact("cone", static_cast<long long>(cone.size()));
  r.fact("cone_one_cell_per_boundary_face", static_cast<long long>(naive.size()));
  r.summary = sizes(cone.size(), k.size());

  std::vector<std::pair<std::string, std::string>> anchors{{poset::kConeApex, apex}};
  if (n >= 3) {
    std::string first = to_string(Bracketing(n, {{1, n - 1}}));
    anchors.emplace_back(first, first);
  }
  iso_by_search(r, cone.cells(), k, anchors);
  auto direct = poset::check_order_iso(cone.cells(), k, [&](const std::string& s) { return cone_image(s, apex, top); });
  r.fact("explicit_map", direct.pass ? "iso" : "not iso");
  if (!direct.pass) r.fail("explicit map: " + direct.witness);

  // the apex vertex lies in the facets K_p x_p K_q and nowhere else
  Index comb = k.at(apex);
  std::size_t in_facets = 0;
  for (Index f : k.of_rank(n - 3)) {
    bool contains = k.leq(comb, f);
    bool r_is_p = false;
    if (n >= 3) {
      auto s = facet_signature(parse_bracketing(k.id(f)));
      r_is_p = s.r == s.p;
    }
    if (contains != r_is_p) r.fail("facet " + k.id(f) + " breaks the apex incidence rule");
    in_facets += contains;
  }
  r.fact("apex_facets", static_cast<long long>(in_facets));
  if (n >= 3 && in_facets != static_cast<std::size_t>(n - 2))
    r.fail("apex lies in " + std::to_string(in_facets) + " facets, expected " + std::to_string(n - 2));

  std::size_t others = 0;
  for (Index v : k.of_rank(0)) {
    if (v == comb) continue;
    ++others;
    if (!base.cells().find(k.id(v))) r.fail("vertex " + k.id(v) + " is missing from the enlarged complex");
  }
  r.fact("other_vertices_in_enlarged", static_cast<long long>(others));
  return r;
}

namespace {

poset::BlockKey product_suffix_key() {
  return [](const std::string& label) {
    auto [a, b] = poset::split_product_label(label);
    return poset::product_label(to_string(suffix_part(parse_bracketing(a))),
                                to_string(suffix_part(parse_bracketing(b))));
  };
}

}  // namespace

Report verify_Q(int p, int q) {
  Report r("Q p=" + std::to_string(p) + " q=" + std::to_string(q));
  if (p < 2 || q < 2) throw std::invalid_argument("verify_Q needs p, q >= 2");
  CellComplex kp = poset::as_complex(build_K(p));
  CellComplex kq = poset::as_complex(build_K(q));
  CellComplex lhs = poset::product_complex(kp, kq);
  CellComplex u = poset::union_complex(poset::product_complex(enlarged_complex(p - 1), kq),
                                       poset::product_complex(kp, enlarged_complex(q - 1)));
  CellComplex rhs = poset::cone_complex(u, product_suffix_key());
  r.fact("product", static_cast<long long>(lhs.size()));
  r.fact("union", static_cast<long long>(u.size()));
  r.fact("cone", static_cast<long long>(rhs.size()));
  r.summary = sizes(rhs.size(), lhs.size());

  const std::string apex =
      poset::product_label(to_string(right_comb_vertex(p)), to_string(right_comb_vertex(q)));
  const std::string top = poset::product_label(to_string(Bracketing::empty(p)), to_string(Bracketing::empty(q)));
  std::vector<std::pair<std::string, std::string>> anchors{{poset::kConeApex, apex}};
  for (const auto& id : u.cells().ids()) anchors.emplace_back(id, id);
  iso_by_search(r, rhs.cells(), lhs.cells(), anchors);
  auto direct =
      poset::check_order_iso(rhs.cells(), lhs.cells(), [&](const std::string& s) { return cone_image(s, apex, top); });
  r.fact("explicit_map", direct.pass ? "iso" : "not iso");
  if (!direct.pass) r.fail("explicit map: " + direct.witness);
  return r;
}

Report verify_cross_cone(const std::string& name, const CellComplex& x, const poset::BlockKey& kx,
                         const CellComplex& y, const poset::BlockKey& ky) {
  Report r("cross_cone " + name);
  CellComplex cx = poset::cone_complex(x, kx);
  CellComplex cy = poset::cone_complex(y, ky);
  CellComplex lhs = poset::product_complex(cx, cy);
  CellComplex u = poset::union_complex(poset::product_complex(x, cy), poset::product_complex(cx, y));
  auto psi_x = poset::cone_carrier(x, kx);
  auto psi_y = poset::cone_carrier(y, ky);
  CellComplex rhs = poset::cone_complex(u, [&](const std::string& label) {
    auto [a, b] = poset::split_product_label(label);
    return poset::product_label(psi_x(a), psi_y(b));
  });
  r.fact("product_of_cones", static_cast<long long>(lhs.size()));
  r.fact("cone_of_union", static_cast<long long>(rhs.size()));
  r.summary = sizes(lhs.size(), rhs.size());
  std::vector<std::pair<std::string, std::string>> anchors;
  for (const auto& id : u.cells().ids()) anchors.emplace_back(id, id);
  iso_by_search(r, rhs.cells(), lhs.cells(), anchors);
  return r;
}

Report verify_cross_cone_Q(int p, int q) {
  return verify_cross_cone("p=" + std::to_string(p) + " q=" + std::to_string(q), enlarged_complex(p - 1), suffix_key(),
                           enlarged_complex(q - 1), suffix_key());
}

Report verify_cross_cone_points() {
  CellComplex pt = poset::as_complex(FacePoset::build({{"pt", 0}}, {}));
  return verify_cross_cone("point x point", pt, {}, pt, {});
}

std::vector<std::vector<long long>> loday_realization(int n) {
  std::vector<std::vector<long long>> out;
  for (const auto& t : trees::enumerate_binary_trees(n)) out.push_back(trees::loday_point(t));
  return out;
}

Report verify_loday(int n, bool extremality) {
  Report r("loday n=" + std::to_string(n));
  auto points = loday_realization(n);
  const long long expected = static_cast<long long>(n) * (n - 1) / 2;
  std::size_t on_plane = 0;
  for (const auto& pt : points) {
    long long sum = 0;
    for (long long x : pt) sum += x;
    if (sum == expected) ++on_plane;
    else r.fail("coordinate sum " + std::to_string(sum) + " != " + std::to_string(expected));
  }
  r.fact("points", static_cast<long long>(points.size()));
  r.fact("hyperplane_sum", expected);
  r.fact("on_hyperplane", static_cast<long long>(on_plane));
  r.summary = std::to_string(on_plane) + " of " + std::to_string(points.size()) + " on the hyperplane";
  if (extremality) {
    std::vector<exact::Vector> rational;
    for (const auto& pt : points) rational.push_back(exact::to_rational(pt));
    std::size_t extreme = 0;
    for (std::size_t i = 0; i < rational.size(); ++i) {
      if (exact::is_extreme(i, rational)) ++extreme;
      else r.fail("point " + std::to_string(i) + " lies in the hull of the others");
    }
    r.fact("extreme", static_cast<long long>(extreme));
    r.summary += ", " + std::to_string(extreme) + " extreme";
  }
  return r;
}

namespace {

const std::vector<Bracketing>& faces_of(int n) {
  static std::map<int, std::vector<Bracketing>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_bracketings(n)).first;
  return it->second;
}

}  // namespace

Report verify_operator_identities(int max_letters) {
  Report r("operator_identities letters<=" + std::to_string(max_letters));
  long long nested = 0, swapped = 0;
  for (int a = 2; a <= max_letters; ++a)
    for (int b = 2; a + b - 1 <= max_letters; ++b)
      for (int c = 2; a + b + c - 2 <= max_letters; ++c)
        for (const auto& o : faces_of(a))
          for (const auto& m : faces_of(b))
            for (const auto& i : faces_of(c)) {
              for (int j = 1; j <= a; ++j)
                for (int k = 1; k <= b; ++k) {
                  ++nested;
                  if (embed(embed(o, j, m), j + k - 1, i) != embed(o, j, embed(m, k, i)))
                    r.fail("nested substitution differs for " + to_string(o) + ", " + to_string(m) + ", " +
                           to_string(i) + " at j=" + std::to_string(j) + " k=" + std::to_string(k));
                }
              // m and i go into two different slots of o
              for (int j = 1; j <= a; ++j)
                for (int k = 1; k < j; ++k) {
                  ++swapped;
                  if (embed(embed(o, k, m), j + b - 1, i) != embed(embed(o, j, i), k, m))
                    r.fail("disjoint substitutions do not commute for " + to_string(o) + ", " + to_string(m) +
                           ", " + to_string(i) + " at j=" + std::to_string(j) + " k=" + std::to_string(k));
                }
            }
  r.fact("nested_cases", nested);
  r.fact("disjoint_cases", swapped);
  r.summary = std::to_string(nested + swapped) + " cases";
  return r;
}

Report verify_degeneracy_relations(int max_n) {
  Report r("degeneracy_relations n<=" + std::to_string(max_n));
  r.notes.push_back("a projection onto a factor is read as returning that factor's bracketing");
  long long interchange = 0, substitution = 0;
  for (int n = 4; n <= max_n; ++n)
    for (const auto& b : faces_of(n))
      for (int j = 1; j <= n - 1; ++j)
        for (int k = 1; k <= j; ++k) {
          ++interchange;
          if (degeneracy(degeneracy(b, k), j) != degeneracy(degeneracy(b, j + 1), k))
            r.fail("s_" + std::to_string(j) + " s_" + std::to_string(k) + " != s_" + std::to_string(k) + " s_" +
                   std::to_string(j + 1) + " on " + to_string(b));
        }
  auto check = [&](bool ok, const std::string& what) {
    ++substitution;
    if (!ok) r.fail(what);
  };
  for (int a = 2; a <= max_n; ++a)
    for (int s = 2; a + s - 1 <= max_n; ++s)
      for (const auto& o : faces_of(a))
        for (const auto& m : faces_of(s))
          for (int k = 1; k <= a; ++k) {
            Bracketing e = embed(o, k, m);
            const int n = a + s - 1;
            if (n < 3) continue;
            auto tag = [&](int j) {
              return to_string(o) + " x_" + std::to_string(k) + " " + to_string(m) + " under s_" + std::to_string(j);
            };
            for (int j = 1; j <= n; ++j) {
              Bracketing d = degeneracy(e, j);
              if (j < k && a > 2) check(d == embed(degeneracy(o, j), k - 1, m), tag(j));
              if (s > 2 && k <= j && j < k + s) check(d == embed(o, k, degeneracy(m, j - k + 1)), tag(j));
              if (k + s <= j && a > 2) check(d == embed(degeneracy(o, j - s + 1), k, m), tag(j));
              if (s == 2 && (j == k || j == k + 1)) check(d == o, tag(j));
              if (a == 2 && k == 2 && j == 1) check(d == m, tag(j));
              if (a == 2 && k == 1 && j == s + 1) check(d == m, tag(j));
            }
          }
  r.fact("interchange_cases", interchange);
  r.fact("substitution_cases", substitution);
  r.summary = std::to_string(interchange + substitution) + " cases";
  return r;
}

}  // namespace assoc::associahedron
