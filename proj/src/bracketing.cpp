#include "assoc/bracketing.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace assoc::associahedron {

Bracketing::Bracketing(int n, std::vector<Bracket> brackets) : n_(n), brackets_(std::move(brackets)) {
  if (n < 1) throw std::invalid_argument("bracketing needs at least one letter");
  std::sort(brackets_.begin(), brackets_.end());
  for (std::size_t i = 0; i < brackets_.size(); ++i) {
    const Bracket& b = brackets_[i];
    if (b.l < 1 || b.r > n || b.l >= b.r)
      throw std::invalid_argument("bracket [" + std::to_string(b.l) + "," + std::to_string(b.r) +
                                  "] out of range for " + std::to_string(n) + " letters");
    if (b.l == 1 && b.r == n) throw std::invalid_argument("bracket around the whole word");
    if (i > 0 && brackets_[i - 1] == b)
      throw std::invalid_argument("repeated bracket [" + std::to_string(b.l) + "," + std::to_string(b.r) + "]");
    for (std::size_t j = 0; j < i; ++j)
      if (!compatible(brackets_[j], b))
        throw std::invalid_argument("crossing brackets [" + std::to_string(brackets_[j].l) + "," +
                                    std::to_string(brackets_[j].r) + "] and [" + std::to_string(b.l) + "," +
                                    std::to_string(b.r) + "]");
  }
}

bool Bracketing::has(const Bracket& b) const {
  return std::binary_search(brackets_.begin(), brackets_.end(), b);
}

Bracketing Bracketing::without(const Bracket& b) const {
  std::vector<Bracket> rest;
  for (const auto& x : brackets_)
    if (!(x == b)) rest.push_back(x);
  return Bracketing(n_, std::move(rest));
}

std::string to_string(const Bracketing& b) {
  std::string out;
  for (int i = 1; i <= b.letters(); ++i) {
    for (const auto& x : b.brackets())
      if (x.l == i) out += '(';
    out += 'a' + std::to_string(i);
    for (const auto& x : b.brackets())
      if (x.r == i) out += ')';
  }
  return out;
}

Bracketing parse_bracketing(std::string_view text) {
  std::vector<Bracket> brackets;
  std::vector<int> open;
  int letter = 0;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad bracketing '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '(') {
      open.push_back(letter + 1);
      ++i;
    } else if (ch == ')') {
      if (open.empty()) fail("unbalanced ')'");
      if (letter < open.back()) fail("empty brackets");
      brackets.push_back({open.back(), letter});
      open.pop_back();
      ++i;
    } else if (ch == 'a') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) fail("letter without index");
      int index = std::stoi(std::string(text.substr(i + 1, j - i - 1)));
      if (index != letter + 1) fail("letters must be a1, a2, ... in order");
      letter = index;
      i = j;
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
  }
  if (!open.empty()) fail("unbalanced '('");
  return Bracketing(letter, std::move(brackets));
}

nlohmann::json to_json(const Bracketing& b) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& x : b.brackets()) list.push_back({x.l, x.r});
  return {{"n", b.letters()}, {"brackets", list}};
}

Bracketing bracketing_from_json(const nlohmann::json& j) {
  std::vector<Bracket> brackets;
  for (const auto& x : j.at("brackets")) {
    if (!x.is_array() || x.size() != 2) throw std::invalid_argument("bracket must be [l,r]");
    brackets.push_back({x[0].get<int>(), x[1].get<int>()});
  }
  return Bracketing(j.at("n").get<int>(), std::move(brackets));
}

namespace {

void extend(const std::vector<Bracket>& candidates, std::size_t from, std::vector<Bracket>& chosen, int n,
            std::vector<Bracketing>& out) {
  out.emplace_back(n, chosen);
  for (std::size_t c = from; c < candidates.size(); ++c) {
    const Bracket& b = candidates[c];
    if (!std::all_of(chosen.begin(), chosen.end(), [&](const Bracket& x) { return compatible(x, b); })) continue;
    chosen.push_back(b);
    extend(candidates, c + 1, chosen, n, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Bracketing> enumerate_bracketings(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_bracketings needs n >= 1");
  std::vector<Bracket> candidates;
  for (int l = 1; l <= n; ++l)
    for (int r = n; r > l; --r)
      if (!(l == 1 && r == n)) candidates.push_back({l, r});
  std::vector<Bracketing> out;
  std::vector<Bracket> chosen;
  extend(candidates, 0, chosen, n, out);
  std::stable_sort(out.begin(), out.end(), [](const Bracketing& a, const Bracketing& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

}  // namespace assoc::associahedron
