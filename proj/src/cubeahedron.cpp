#include "assoc/cubeahedron.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "assoc/associahedron.hpp"
#include "assoc/multiplihedron.hpp"

namespace assoc::cubeahedron {

using poset::FacePoset;
using poset::Index;

bool operator<(const DesignTube& a, const DesignTube& b) {
  if (a.shape != b.shape) return a.shape == DesignTube::Shape::Round;
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.hi < b.hi;
}

namespace {

bool nested(const DesignTube& a, const DesignTube& b) {
  return (a.lo <= b.lo && b.hi <= a.hi) || (b.lo <= a.lo && a.hi <= b.hi);
}

std::string tube_text(const DesignTube& t) {
  std::string out = t.is_round() ? "R" : "S";
  out += std::to_string(t.lo);
  if (t.hi != t.lo) out += "-" + std::to_string(t.hi);
  return out;
}

}  // namespace

bool compatible(const DesignTube& a, const DesignTube& b) {
  if (a.is_round() && b.is_round()) return nested(a, b) || a.hi + 1 < b.lo || b.hi + 1 < a.lo;
  return !nested(a, b);
}

DesignTubing::DesignTubing(int n, std::vector<DesignTube> tubes) : n_(n), tubes_(std::move(tubes)) {
  if (n < 1) throw std::invalid_argument("a path needs at least one node");
  std::sort(tubes_.begin(), tubes_.end());
  for (std::size_t i = 0; i < tubes_.size(); ++i) {
    const auto& t = tubes_[i];
    if (t.lo < 1 || t.hi > n || t.lo > t.hi || (!t.is_round() && t.lo != t.hi))
      throw std::invalid_argument("tube " + tube_text(t) + " is not valid on " + std::to_string(n) + " nodes");
    if (i > 0 && tubes_[i - 1] == t) throw std::invalid_argument("repeated tube " + tube_text(t));
    for (std::size_t j = 0; j < i; ++j)
      if (!compatible(tubes_[j], t))
        throw std::invalid_argument("tubes " + tube_text(tubes_[j]) + " and " + tube_text(t) + " are not compatible");
  }
}

DesignTubing DesignTubing::without(std::size_t i) const {
  auto rest = tubes_;
  rest.erase(rest.begin() + static_cast<long>(i));
  return DesignTubing(n_, std::move(rest));
}

std::string to_string(const DesignTubing& t) {
  std::string out = "{";
  for (std::size_t i = 0; i < t.tubes().size(); ++i) {
    if (i) out += ",";
    out += tube_text(t.tubes()[i]);
  }
  return out + "}";
}

DesignTubing parse_tubing(int n, std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad tubing '" + std::string(text) + "': " + why);
  };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') fail("expected braces");
  s = s.substr(1, s.size() - 2);
  std::vector<DesignTube> tubes;
  std::size_t pos = 0;
  auto number = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a node number");
    return std::stoi(s.substr(start, pos - start));
  };
  while (pos < s.size()) {
    char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos++])));
    if (kind != 'R' && kind != 'S') fail("tube must start with R or S");
    int lo = number();
    int hi = lo;
    if (pos < s.size() && s[pos] == '-') {
      ++pos;
      hi = number();
    }
    tubes.push_back(kind == 'R' ? DesignTube::round(lo, hi) : DesignTube{DesignTube::Shape::Square, lo, hi});
    if (pos < s.size()) {
      if (s[pos] != ',') fail("expected ','");
      ++pos;
      if (pos == s.size()) fail("trailing ','");
    }
  }
  return DesignTubing(n, std::move(tubes));
}

nlohmann::json to_json(const DesignTubing& t) {
  nlohmann::json tubes = nlohmann::json::array();
  for (const auto& x : t.tubes()) {
    nlohmann::json nodes = nlohmann::json::array();
    for (int v = x.lo; v <= x.hi; ++v) nodes.push_back(v);
    tubes.push_back({{"kind", x.is_round() ? "round" : "square"}, {"nodes", nodes}});
  }
  return {{"n", t.nodes()}, {"tubes", tubes}};
}

DesignTubing tubing_from_json(const nlohmann::json& j) {
  std::vector<DesignTube> tubes;
  for (const auto& x : j.at("tubes")) {
    auto nodes = x.at("nodes").get<std::vector<int>>();
    if (nodes.empty()) throw std::invalid_argument("tube without nodes");
    for (std::size_t i = 1; i < nodes.size(); ++i)
      if (nodes[i] != nodes[i - 1] + 1) throw std::invalid_argument("tube nodes must be consecutive and ascending");
    auto kind = x.at("kind").get<std::string>();
    if (kind == "round") tubes.push_back(DesignTube::round(nodes.front(), nodes.back()));
    else if (kind == "square") tubes.push_back({DesignTube::Shape::Square, nodes.front(), nodes.back()});
    else throw std::invalid_argument("unknown tube kind " + kind);
  }
  return DesignTubing(j.at("n").get<int>(), std::move(tubes));
}

namespace {

template <class Tube, class Compatible, class Emit>
void subsets(const std::vector<Tube>& all, std::size_t from, std::vector<Tube>& chosen, const Compatible& ok,
             const Emit& emit) {
  emit(chosen);
  for (std::size_t c = from; c < all.size(); ++c) {
    if (!std::all_of(chosen.begin(), chosen.end(), [&](const Tube& x) { return ok(x, all[c]); })) continue;
    chosen.push_back(all[c]);
    subsets(all, c + 1, chosen, ok, emit);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<DesignTubing> enumerate_design_tubings(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_design_tubings needs n >= 1");
  std::vector<DesignTube> all;
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo; hi <= n; ++hi) all.push_back(DesignTube::round(lo, hi));
  for (int v = 1; v <= n; ++v) all.push_back(DesignTube::square(v));
  std::vector<DesignTubing> out;
  std::vector<DesignTube> chosen;
  subsets(all, 0, chosen, [](const DesignTube& a, const DesignTube& b) { return compatible(a, b); },
          [&](const std::vector<DesignTube>& ts) { out.emplace_back(n, ts); });
  std::stable_sort(out.begin(), out.end(), [](const DesignTubing& a, const DesignTubing& b) { return a.size() > b.size(); });
  return out;
}

FacePoset build_CP(int n) {
  auto all = enumerate_design_tubings(n);
  std::vector<poset::Element> elements;
  std::map<std::string, Index> index;
  for (const auto& t : all) {
    index.emplace(to_string(t), elements.size());
    elements.push_back({to_string(t), t.dimension()});
  }
  poset::Relation rel;
  for (const auto& t : all)
    for (std::size_t i = 0; i < t.size(); ++i) rel.emplace_back(index.at(to_string(t)), index.at(to_string(t.without(i))));
  return FacePoset::build(elements, rel);
}

multiplihedron::FlatExpression tubing_to_expression(const DesignTubing& t) {
  const int n = t.nodes();
  std::vector<int> opens(n + 2, 0), closes(n + 2, 0);
  std::vector<char> square(n + 1, 0), covered(n + 1, 0);
  for (const auto& x : t.tubes()) {
    if (x.is_round()) {
      ++opens[x.lo];
      ++closes[x.hi + 1];
      for (int v = x.lo; v <= x.hi; ++v) covered[v] = 1;
    } else {
      square[x.lo] = 1;
    }
  }
  std::string text = "f(";
  for (int i = 1; i <= n + 1; ++i) {
    text += std::string(opens[i], '(') + "a" + std::to_string(i) + std::string(closes[i], ')');
    if (i == n + 1) break;
    if (square[i]) text += ")f(";
    else if (!covered[i]) text += ".";
  }
  text += ")";
  return multiplihedron::parse_flat_expression(text);
}

namespace {

std::string sizes(std::size_t a, std::size_t b) { return std::to_string(a) + " = " + std::to_string(b); }

}  // namespace

Report verify_cubeahedron_iso(int n) {
  Report r("cubeahedron n=" + std::to_string(n));
  FacePoset cp = build_CP(n);
  FacePoset jp = multiplihedron::build_Jprime(n + 1);
  auto iso = poset::check_order_iso(cp, jp, [n](const std::string& s) {
    return multiplihedron::to_string(tubing_to_expression(parse_tubing(n, s)));
  });
  r.fact("design_tubings", static_cast<long long>(cp.size()));
  r.fact("collapsed", static_cast<long long>(jp.size()));
  r.summary = sizes(cp.size(), jp.size());
  if (!iso.pass) r.fail(iso.witness);
  r.fact("simple", poset::is_simple(cp) ? "yes" : "no");
  if (!poset::is_simple(cp)) r.fail("the tubing poset is not simple");
  return r;
}

FacePoset build_tubing_poset(int n) {
  if (n < 1) throw std::invalid_argument("build_tubing_poset needs n >= 1");
  using Tube = std::pair<int, int>;
  std::vector<Tube> all;
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo; hi <= n; ++hi)
      if (!(lo == 1 && hi == n)) all.emplace_back(lo, hi);
  auto ok = [](const Tube& a, const Tube& b) {
    bool nest = (a.first <= b.first && b.second <= a.second) || (b.first <= a.first && a.second <= b.second);
    return nest || a.second + 1 < b.first || b.second + 1 < a.first;
  };
  auto label = [](const std::vector<Tube>& ts) {
    auto sorted = ts;
    std::sort(sorted.begin(), sorted.end());
    std::string out = "{";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(sorted[i].first);
      if (sorted[i].second != sorted[i].first) out += "-" + std::to_string(sorted[i].second);
    }
    return out + "}";
  };
  std::vector<std::vector<Tube>> tubings;
  std::vector<Tube> chosen;
  subsets(all, 0, chosen, ok, [&](const std::vector<Tube>& ts) { tubings.push_back(ts); });
  std::vector<poset::Element> elements;
  std::map<std::string, Index> index;
  for (const auto& ts : tubings) {
    index.emplace(label(ts), elements.size());
    elements.push_back({label(ts), n - 1 - static_cast<int>(ts.size())});
  }
  poset::Relation rel;
  for (const auto& ts : tubings)
    for (std::size_t i = 0; i < ts.size(); ++i) {
      auto rest = ts;
      rest.erase(rest.begin() + static_cast<long>(i));
      rel.emplace_back(index.at(label(ts)), index.at(label(rest)));
    }
  return FacePoset::build(elements, rel);
}

namespace {

// "{1-2,4}" on n nodes -> bracketing of n+1 letters
associahedron::Bracketing tubing_to_bracketing(int n, const std::string& s) {
  std::vector<associahedron::Bracket> out;
  std::size_t pos = 1;
  while (pos + 1 < s.size()) {
    std::size_t end = s.find_first_of(",}", pos);
    std::string tube = s.substr(pos, end - pos);
    auto dash = tube.find('-');
    int lo = std::stoi(tube.substr(0, dash));
    int hi = dash == std::string::npos ? lo : std::stoi(tube.substr(dash + 1));
    out.push_back({lo, hi + 1});
    pos = end + 1;
  }
  return associahedron::Bracketing(n + 1, std::move(out));
}

}  // namespace

Report verify_composed(int n) {
  Report r("composed n=" + std::to_string(n));
  FacePoset cp = build_CP(n);
  FacePoset k = associahedron::build_K(n + 2);
  auto iso = poset::check_order_iso(cp, k, [n](const std::string& s) {
    return associahedron::to_string(multiplihedron::phi_map(tubing_to_expression(parse_tubing(n, s))));
  });
  r.fact("design_tubings", static_cast<long long>(cp.size()));
  r.fact("K_n+2", static_cast<long long>(k.size()));
  r.summary = sizes(cp.size(), k.size());
  if (!iso.pass) r.fail("design tubings: " + iso.witness);

  FacePoset ordinary = build_tubing_poset(n + 1);
  auto iso2 = poset::check_order_iso(ordinary, k, [n](const std::string& s) {
    return associahedron::to_string(tubing_to_bracketing(n + 1, s));
  });
  r.fact("ordinary_tubings", static_cast<long long>(ordinary.size()));
  if (!iso2.pass) r.fail("ordinary tubings: " + iso2.witness);
  return r;
}

}  // namespace assoc::cubeahedron
