#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace assoc::poset {

using Index = std::size_t;
using Relation = std::vector<std::pair<Index, Index>>;
using Bits = boost::dynamic_bitset<>;

/// Raised by Poset::close when the generating relation has a directed cycle.
class CycleError : public std::invalid_argument {
 public:
  CycleError(const std::string& what, std::vector<std::string> cycle)
      : std::invalid_argument(what), cycle_(std::move(cycle)) {}
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

/// Raised when a rank function is not a grading of the order.
class GradingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite partial order over string-labelled elements.
///
/// The order is stored as the reflexive-transitive closure of a generating
/// relation (one up-set and one down-set bitset per element) together with
/// the cover relation (Hasse diagram).  Element indices follow the order of
/// the ids passed at construction.
class Poset {
 public:
  Poset() = default;

  /// Reflexive-transitive closure of `generators` (pairs lower -> upper).
  /// Self pairs are ignored; duplicate ids and cycles are rejected.
  static Poset close(std::vector<std::string> ids, const Relation& generators);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::string& id(Index i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<Index> find(std::string_view id) const;
  Index at(std::string_view id) const;

  bool leq(Index a, Index b) const { return up_[a].test(b); }
  bool less(Index a, Index b) const { return a != b && up_[a].test(b); }
  const Bits& up_set(Index i) const { return up_[i]; }
  const Bits& down_set(Index i) const { return down_[i]; }

  const std::vector<Index>& upper_covers(Index i) const { return upper_[i]; }
  const std::vector<Index>& lower_covers(Index i) const { return lower_[i]; }
  /// All cover pairs, sorted by (lower, upper).
  Relation covers() const;
  std::size_t cover_count() const;

  std::vector<Index> minimal() const;
  std::vector<Index> maximal() const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, Index> index_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::vector<Index>> upper_;
  std::vector<std::vector<Index>> lower_;
};

/// Label-level convenience for Poset::close.
Poset close_order(std::vector<std::string> ids,
                  const std::vector<std::pair<std::string, std::string>>& covers);

struct Element {
  std::string id;
  int rank = 0;
};

/// A graded poset: ranks go up by exactly one along every cover and every
/// minimal element has rank 0.  Gradedness is verified at construction.
class FacePoset : public Poset {
 public:
  FacePoset() = default;
  FacePoset(Poset order, std::vector<int> ranks);

  static FacePoset build(const std::vector<Element>& elements, const Relation& generators);
  /// Ranks are taken to be the length of the longest chain down to a
  /// minimal element, then checked like any other grading.
  static FacePoset build_by_height(std::vector<std::string> ids, const Relation& generators);

  int rank(Index i) const { return ranks_[i]; }
  const std::vector<int>& ranks() const { return ranks_; }
  /// Largest rank, or -1 when empty.
  int dimension() const;
  /// The greatest element, if there is one.
  std::optional<Index> top() const;
  std::vector<Index> of_rank(int r) const;

 private:
  std::vector<int> ranks_;
};

/// Number of elements of each rank, indexed by rank.
std::vector<std::size_t> f_vector(const FacePoset& p);

/// Alternating sum of the f-vector below the top rank.
long long boundary_euler_characteristic(const FacePoset& p);
/// Euler characteristic of the sphere S^(d-1): 1 + (-1)^(d-1).
long long sphere_euler_characteristic(int d);

/// True iff every rank-0 element lies below exactly d elements of rank d-1,
/// where d is the rank of the top.
bool is_simple(const FacePoset& p);

struct IsoReport {
  bool pass = false;
  std::size_t p_size = 0;
  std::size_t q_size = 0;
  std::string witness;
};

/// Checks that `map` (indexed by elements of p, values are elements of q) is
/// a rank-preserving order isomorphism, testing both directions of x<=y.
IsoReport check_order_iso(const FacePoset& p, const FacePoset& q, std::span<const Index> map);
/// Same, with the map given on labels.
IsoReport check_order_iso(const FacePoset& p, const FacePoset& q,
                          const std::function<std::string(const std::string&)>& map);

/// Rank-stratified backtracking search for an order isomorphism p -> q that
/// extends `anchors`.  Deterministic: candidates are tried in index order.
std::optional<std::vector<Index>> search_iso(const FacePoset& p, const FacePoset& q,
                                             std::span<const std::pair<Index, Index>> anchors = {});

}  // namespace assoc::poset
