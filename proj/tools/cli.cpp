#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "assoc/associahedron.hpp"
#include "assoc/cubeahedron.hpp"
#include "assoc/models.hpp"
#include "assoc/multiplihedron.hpp"
#include "assoc/poset_io.hpp"
#include "assoc/trees.hpp"

namespace assoc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  int min_n;
  int cap;
  std::function<std::vector<Report>(int)> run;
};

std::vector<Report> q_reports(int total, bool cross) {
  std::vector<Report> out;
  for (int p = 2; total - p >= 2; ++p)
    out.push_back(cross ? associahedron::verify_cross_cone_Q(p, total - p) : associahedron::verify_Q(p, total - p));
  if (cross && total == 4) out.push_back(associahedron::verify_cross_cone_points());
  return out;
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all{
      {"theoremA", 2, 6, [](int n) { return std::vector<Report>{associahedron::verify_theorem_A(n)}; }},
      {"Q", 4, 8, [](int n) { return q_reports(n, false); }},
      {"crosscone", 4, 8, [](int n) { return q_reports(n, true); }},
      {"loday", 2, 8, [](int n) { return std::vector<Report>{associahedron::verify_loday(n, n <= 6)}; }},
      {"identities", 3, 8, [](int n) { return std::vector<Report>{associahedron::verify_operator_identities(n)}; }},
      {"degeneracy", 4, 6, [](int n) { return std::vector<Report>{associahedron::verify_degeneracy_relations(n)}; }},
      {"phi", 1, 5, [](int n) { return std::vector<Report>{multiplihedron::verify_Phi(n)}; }},
      {"phiprime", 1, 6, [](int n) { return std::vector<Report>{multiplihedron::verify_phi(n)}; }},
      {"cubeahedron", 1, 5, [](int n) { return std::vector<Report>{cubeahedron::verify_cubeahedron_iso(n)}; }},
      {"composed", 1, 5, [](int n) { return std::vector<Report>{cubeahedron::verify_composed(n)}; }},
      {"sphere", 1, 8,
       [](int n) {
         std::vector<Report> out;
         for (const auto& m : model_names()) {
           if (n < model_min(m) || n > model_cap(m)) continue;
           Report r = verify_sphere(m, build_model(m, n));
           r.check += " n=" + std::to_string(n);
           out.push_back(std::move(r));
         }
         return out;
       }},
  };
  return all;
}

std::string check_names() {
  std::string s;
  for (const auto& c : checks()) s += c.name + ", ";
  return s + "all";
}

// n above the default cap needs an explicit --cap, which warns
int limit(int default_cap, std::optional<int> cap, std::ostream& err) {
  if (!cap) return default_cap;
  if (*cap > default_cap) err << "warning: raising the limit above the default of " << default_cap << " may be slow\n";
  return *cap;
}

void require_n(int n, int lo, int hi, const std::string& what) {
  if (n < lo) throw UsageError(what + " needs --n >= " + std::to_string(lo));
  if (n > hi)
    throw UsageError(what + ": n = " + std::to_string(n) + " exceeds the limit " + std::to_string(hi) +
                     " (use --cap to raise it)");
}

std::string enumerate_cmd(const std::string& model, int n, const std::string& format) {
  poset::FacePoset p = build_model(model, n);
  if (format == "json") return to_json(p).dump(2) + "\n";
  if (format == "dot") return poset::to_dot(p, model + std::to_string(n));
  std::ostringstream out;
  if (format == "csv") out << "id,rank\n";
  for (poset::Index v = 0; v < p.size(); ++v) {
    if (format == "csv") out << '"' << p.id(v) << "\"," << p.rank(v) << "\n";
    else out << p.id(v) << "\n";
  }
  return out.str();
}

std::string fvector_cmd(const std::string& model, int n, const std::string& format) {
  auto f = poset::f_vector(build_model(model, n));
  if (format == "json") return nlohmann::json{{"model", model}, {"n", n}, {"f_vector", f}}.dump() + "\n";
  if (format == "dot") throw UsageError("fvector has no dot format");
  std::string sep = format == "csv" ? "," : " ";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? sep : "") + std::to_string(f[i]);
  return out + "\n";
}

std::string coords_cmd(int n, const std::string& format) {
  if (format == "dot") throw UsageError("coords has no dot format");
  auto ts = trees::enumerate_binary_trees(n);
  std::ostringstream out;
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& t : ts) rows.push_back({{"tree", trees::to_string(t.tree())}, {"point", trees::loday_point(t)}});
    return rows.dump(2) + "\n";
  }
  if (format == "csv") {
    out << "tree";
    for (int i = 1; i < n; ++i) out << ",x" << i;
    out << "\n";
  }
  for (const auto& t : ts) {
    auto pt = trees::loday_point(t);
    out << trees::to_string(t.tree()) << (format == "csv" ? "," : "\t");
    if (format != "csv") out << "(";
    for (std::size_t i = 0; i < pt.size(); ++i) out << (i ? "," : "") << pt[i];
    if (format != "csv") out << ")";
    out << "\n";
  }
  return out.str();
}

cubeahedron::DesignTubing read_tubing(const std::string& element, std::optional<int> n) {
  if (element.find('"') != std::string::npos) return cubeahedron::tubing_from_json(nlohmann::json::parse(element));
  if (!n) throw UsageError("a tubing in text form needs --n for the number of nodes");
  return cubeahedron::parse_tubing(*n, element);
}

std::string map_cmd(const std::string& via, const std::string& element, std::optional<int> n, const std::string& format) {
  std::string image;
  if (via == "phi") {
    image = multiplihedron::to_string(multiplihedron::Phi(multiplihedron::parse_painted_tree(element)));
  } else if (via == "phiprime") {
    image = associahedron::to_string(multiplihedron::phi_map(multiplihedron::parse_flat_expression(element)));
  } else if (via == "tubing") {
    image = multiplihedron::to_string(cubeahedron::tubing_to_expression(read_tubing(element, n)));
  } else {
    image = associahedron::to_string(
        multiplihedron::phi_map(cubeahedron::tubing_to_expression(read_tubing(element, n))));
  }
  if (format == "json") return nlohmann::json{{"via", via}, {"element", element}, {"image", image}}.dump() + "\n";
  if (format == "text") return image + "\n";
  throw UsageError("map supports text and json formats");
}

int verify_cmd(const std::string& check, std::optional<int> n, std::optional<int> cap, const std::string& format,
               std::string& text, std::ostream& err) {
  std::vector<Report> reports;
  bool found = false;
  for (const auto& c : checks()) {
    if (check != "all" && check != c.name) continue;
    found = true;
    int hi = limit(c.cap, cap, err);
    if (check == "all") {
      int top = n ? std::min(*n, hi) : hi;
      for (int m = c.min_n; m <= top; ++m)
        for (auto& r : c.run(m)) reports.push_back(std::move(r));
    } else {
      int m = n.value_or(hi);
      require_n(m, c.min_n, hi, "check " + c.name);
      for (auto& r : c.run(m)) reports.push_back(std::move(r));
    }
  }
  if (!found) throw UsageError("unknown check '" + check + "'; expected one of " + check_names());
  bool pass = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    text = nlohmann::json{{"pass", pass}, {"reports", j}}.dump(2) + "\n";
  } else if (format == "text") {
    for (const auto& r : reports) text += render_text(r);
  } else {
    throw UsageError("verify supports text and json formats");
  }
  return pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Face posets of associahedra, multiplihedra and graph cubeahedra"};
  app.name("assoc");
  app.require_subcommand(1);

  std::string model, format = "text", check = "all", via, element, output;
  int n_value = 0;
  int cap_value = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", n_value, "size parameter");
    sub->add_option("--format", format, "text, json, dot or csv")
        ->check(CLI::IsMember({"text", "json", "dot", "csv"}));
    sub->add_option("--output", output, "write to this file instead of standard output");
    sub->add_option("--cap", cap_value, "raise the default limit on n");
  };
  const std::vector<std::string> models = model_names();
  auto* enumerate = app.add_subcommand("enumerate", "list the elements of a model");
  auto* fvector = app.add_subcommand("fvector", "count the elements of each rank");
  auto* coords = app.add_subcommand("coords", "integer coordinates of binary trees with n leaves");
  auto* map = app.add_subcommand("map", "carry one element across a bijection");
  auto* verify = app.add_subcommand("verify", "run verification checks");
  for (auto* sub : {enumerate, fvector}) {
    common(sub);
    sub->add_option("--model", model, "k, j, jprime or cp")->required()->check(CLI::IsMember(models));
  }
  common(coords);
  common(map);
  map->add_option("--via", via, "phi, phiprime, tubing or composed")
      ->required()
      ->check(CLI::IsMember({"phi", "phiprime", "tubing", "composed"}));
  map->add_option("--element", element, "element in its text encoding")->required();
  common(verify);
  verify->add_option("--check", check, check_names());

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto sub = app.get_subcommands().front();
  std::optional<int> n = sub->count("--n") ? std::optional<int>(n_value) : std::nullopt;
  std::optional<int> cap = sub->count("--cap") ? std::optional<int>(cap_value) : std::nullopt;

  try {
    std::string text;
    int status = 0;
    if (sub == enumerate || sub == fvector) {
      if (!n) throw UsageError("--n is required");
      require_n(*n, model_min(model), limit(model_cap(model), cap, err), "model " + model);
      text = sub == enumerate ? enumerate_cmd(model, *n, format) : fvector_cmd(model, *n, format);
    } else if (sub == coords) {
      if (!n) throw UsageError("--n is required");
      require_n(*n, 2, limit(model_cap("k"), cap, err), "coords");
      text = coords_cmd(*n, format);
    } else if (sub == map) {
      text = map_cmd(via, element, n, format);
    } else {
      status = verify_cmd(check, n, cap, format, text, err);
    }
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file || !(file << text)) {
        err << "error: cannot write " << output << "\n";
        return 2;
      }
    }
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace assoc::cli
