#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace assoc::associahedron {

/// Parentheses around letters l..r (1-indexed, inclusive).
struct Bracket {
  int l = 0;
  int r = 0;
  int length() const { return r - l + 1; }
  bool contains(const Bracket& o) const { return l <= o.l && o.r <= r; }
  bool disjoint(const Bracket& o) const { return r < o.l || o.r < l; }
  bool operator==(const Bracket&) const = default;
};

/// Outer brackets sort before the brackets they contain.
inline bool operator<(const Bracket& a, const Bracket& b) {
  return a.l != b.l ? a.l < b.l : a.r > b.r;
}

/// A set of pairwise nested-or-disjoint brackets on the word a1...an.  The
/// bracket around the whole word and single-letter brackets are excluded.
class Bracketing {
 public:
  Bracketing() = default;
  Bracketing(int n, std::vector<Bracket> brackets);
  static Bracketing empty(int n) { return Bracketing(n, {}); }

  int letters() const { return n_; }
  const std::vector<Bracket>& brackets() const { return brackets_; }
  std::size_t size() const { return brackets_.size(); }
  int dimension() const { return n_ - 2 - static_cast<int>(brackets_.size()); }
  bool has(const Bracket& b) const;
  /// Bracketing with bracket `b` removed.
  Bracketing without(const Bracket& b) const;

  bool operator==(const Bracketing&) const = default;
  auto operator<=>(const Bracketing& o) const {
    if (n_ != o.n_) return n_ <=> o.n_;
    return std::lexicographical_compare_three_way(
        brackets_.begin(), brackets_.end(), o.brackets_.begin(), o.brackets_.end(),
        [](const Bracket& a, const Bracket& b) {
          if (a == b) return std::strong_ordering::equal;
          return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
        });
  }

 private:
  int n_ = 0;
  std::vector<Bracket> brackets_;
};

/// "a1(a2a3)a4"
std::string to_string(const Bracketing& b);
Bracketing parse_bracketing(std::string_view text);

/// {"n":4,"brackets":[[2,3]]}
nlohmann::json to_json(const Bracketing& b);
Bracketing bracketing_from_json(const nlohmann::json& j);

/// True iff two brackets may appear together.
inline bool compatible(const Bracket& a, const Bracket& b) {
  return a.contains(b) || b.contains(a) || a.disjoint(b);
}

/// All bracketings of an n-letter word: vertices (n-2 brackets) first, then
/// by decreasing bracket count, lexicographic within a count.
std::vector<Bracketing> enumerate_bracketings(int n);

}  // namespace assoc::associahedron
