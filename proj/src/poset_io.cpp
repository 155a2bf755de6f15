#include "assoc/poset_io.hpp"

#include <sstream>

namespace assoc::poset {

nlohmann::json to_json(const FacePoset& p) {
  nlohmann::json elements = nlohmann::json::array();
  for (Index v = 0; v < p.size(); ++v) elements.push_back({{"id", p.id(v)}, {"rank", p.rank(v)}});
  nlohmann::json covers = nlohmann::json::array();
  for (auto [a, b] : p.covers()) covers.push_back({p.id(a), p.id(b)});
  return {{"elements", elements}, {"covers", covers}};
}

FacePoset face_poset_from_json(const nlohmann::json& j) {
  std::vector<Element> elements;
  for (const auto& e : j.at("elements")) elements.push_back({e.at("id").get<std::string>(), e.at("rank").get<int>()});
  std::unordered_map<std::string, Index> index;
  for (Index i = 0; i < elements.size(); ++i) index.emplace(elements[i].id, i);
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw std::invalid_argument("cover mentions unknown element " + id);
    return it->second;
  };
  Relation rel;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) throw std::invalid_argument("cover must be a pair of ids");
    rel.emplace_back(lookup(c[0].get<std::string>()), lookup(c[1].get<std::string>()));
  }
  return FacePoset::build(elements, rel);
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const FacePoset& p, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (int r = 0; r <= p.dimension(); ++r) {
    out << "  { rank=same; // rank " << r << "\n";
    for (Index v : p.of_rank(r)) out << "    " << quoted(p.id(v)) << ";\n";
    out << "  }\n";
  }
  for (auto [a, b] : p.covers()) out << "  " << quoted(p.id(a)) << " -> " << quoted(p.id(b)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace assoc::poset
