#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace assoc {

/// Outcome of one verification.  `facts` are name/value pairs shown in
/// order; `witness` describes the first failure.
struct Report {
  std::string check;
  bool pass = true;
  std::vector<std::pair<std::string, std::string>> facts;
  std::string witness;
  std::vector<std::string> notes;
  std::string summary;

  Report() = default;
  explicit Report(std::string name) : check(std::move(name)) {}

  void fact(const std::string& name, const std::string& value) { facts.emplace_back(name, value); }
  void fact(const std::string& name, long long value) { facts.emplace_back(name, std::to_string(value)); }
  /// Records a failure; only the first witness is kept.
  void fail(const std::string& why);
  /// Folds a sub-report in, prefixing its facts.
  void absorb(const Report& sub);
};

nlohmann::json to_json(const Report& r);
/// "PASS <check>: <summary>" followed by indented facts, witness and notes.
std::string render_text(const Report& r);

}  // namespace assoc
