#pragma once

#include <string>
#include <vector>

#include "assoc/poset.hpp"
#include "assoc/report.hpp"

namespace assoc {

/// The face-poset models by short name: "k" (bracketings of n letters), "j"
/// (painted trees with n leaves), "jprime" (flat expressions over n letters)
/// and "cp" (design tubings of the path with n nodes).
const std::vector<std::string>& model_names();
bool is_model(const std::string& name);
/// Default upper limit on n for a model.
int model_cap(const std::string& name);
/// Smallest n a model accepts.
int model_min(const std::string& name);
poset::FacePoset build_model(const std::string& name, int n);
/// Canonical element labels of a model in enumeration order.
std::vector<std::string> enumerate_model(const std::string& name, int n);

/// Gradedness plus boundary Euler characteristic against the sphere of one
/// dimension less than the top.
Report verify_sphere(const std::string& name, const poset::FacePoset& p);

}  // namespace assoc
