#include "assoc/report.hpp"

#include <sstream>

namespace assoc {

void Report::fail(const std::string& why) {
  if (pass) witness = why;
  pass = false;
}

void Report::absorb(const Report& sub) {
  for (const auto& [k, v] : sub.facts) facts.emplace_back(sub.check + "." + k, v);
  for (const auto& n : sub.notes) notes.push_back(n);
  if (!sub.pass) fail(sub.check + ": " + sub.witness);
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json facts = nlohmann::json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  nlohmann::json j = {{"check", r.check}, {"pass", r.pass}, {"summary", r.summary}, {"facts", facts}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS " : "FAIL ") << r.check;
  if (!r.summary.empty()) out << ": " << r.summary;
  out << "\n";
  for (const auto& [k, v] : r.facts) out << "  " << k << " = " << v << "\n";
  if (!r.witness.empty()) out << "  witness: " << r.witness << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

}  // namespace assoc
