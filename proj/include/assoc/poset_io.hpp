#pragma once

#include <string>

#include <json.hpp>

#include "assoc/poset.hpp"

namespace assoc::poset {

/// {"elements":[{"id":..,"rank":..}],"covers":[[lower,upper]]}
nlohmann::json to_json(const FacePoset& p);
FacePoset face_poset_from_json(const nlohmann::json& j);

/// Hasse diagram as a DOT digraph.  Nodes are emitted rank by rank, each rank
/// in its own same-rank group, and edges in sorted cover order.
std::string to_dot(const FacePoset& p, const std::string& graph_name = "hasse");

}  // namespace assoc::poset
