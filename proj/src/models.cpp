#include "assoc/models.hpp"

#include <stdexcept>

#include "assoc/associahedron.hpp"
#include "assoc/cubeahedron.hpp"
#include "assoc/multiplihedron.hpp"

namespace assoc {

const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names{"k", "j", "jprime", "cp"};
  return names;
}

bool is_model(const std::string& name) {
  for (const auto& m : model_names())
    if (m == name) return true;
  return false;
}

int model_cap(const std::string& name) {
  if (name == "k") return 8;
  if (name == "j") return 5;
  if (name == "jprime") return 6;
  if (name == "cp") return 5;
  throw std::invalid_argument("unknown model " + name);
}

int model_min(const std::string& name) {
  if (name == "k") return 2;
  if (is_model(name)) return 1;
  throw std::invalid_argument("unknown model " + name);
}

poset::FacePoset build_model(const std::string& name, int n) {
  if (n < model_min(name)) throw std::invalid_argument("model " + name + " needs n >= " + std::to_string(model_min(name)));
  if (name == "k") return associahedron::build_K(n);
  if (name == "j") return multiplihedron::build_Jtree(n);
  if (name == "jprime") return multiplihedron::build_Jprime(n);
  return cubeahedron::build_CP(n);
}

std::vector<std::string> enumerate_model(const std::string& name, int n) {
  return build_model(name, n).ids();
}

Report verify_sphere(const std::string& name, const poset::FacePoset& p) {
  Report r("sphere " + name);
  const int d = p.dimension();
  long long chi = poset::boundary_euler_characteristic(p);
  long long expected = poset::sphere_euler_characteristic(d);
  r.fact("dimension", d);
  r.fact("boundary_euler", chi);
  r.fact("sphere_euler", expected);
  r.summary = std::to_string(chi) + " = " + std::to_string(expected);
  if (!p.top()) r.fail("no greatest element");
  if (chi != expected) r.fail("boundary Euler characteristic " + std::to_string(chi) + ", sphere has " + std::to_string(expected));
  return r;
}

}  // namespace assoc
