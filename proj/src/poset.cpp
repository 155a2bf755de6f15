#include "assoc/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace assoc::poset {

namespace {

// Finds one directed cycle among the vertices that survived Kahn's algorithm.
std::vector<Index> find_cycle(const std::vector<std::vector<Index>>& succ,
                              const std::vector<bool>& remaining) {
  const std::size_t n = succ.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<Index> stack;
  for (Index start = 0; start < n; ++start) {
    if (!remaining[start] || state[start] != 0) continue;
    // iterative DFS keeping (vertex, next successor position)
    std::vector<std::pair<Index, std::size_t>> frames{{start, 0}};
    state[start] = 1;
    stack.push_back(start);
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < succ[v].size()) {
        Index w = succ[v][pos++];
        if (!remaining[w]) continue;
        if (state[w] == 1) {
          auto it = std::find(stack.begin(), stack.end(), w);
          std::vector<Index> cycle(it, stack.end());
          cycle.push_back(w);
          return cycle;
        }
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back(w);
          frames.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
        frames.pop_back();
      }
    }
  }
  return {};
}

}  // namespace

Poset Poset::close(std::vector<std::string> ids, const Relation& generators) {
  Poset p;
  const std::size_t n = ids.size();
  p.ids_ = std::move(ids);
  p.index_.reserve(n);
  for (Index i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.ids_[i], i).second) {
      throw std::invalid_argument("duplicate element id: " + p.ids_[i]);
    }
  }

  std::vector<std::vector<Index>> succ(n), pred(n);
  for (auto [a, b] : generators) {
    if (a >= n || b >= n) throw std::out_of_range("relation refers to unknown element");
    if (a == b) continue;
    succ[a].push_back(b);
    pred[b].push_back(a);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  for (auto& s : pred) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  // Kahn's algorithm; a lower index is preferred so the order is deterministic.
  std::vector<std::size_t> indegree(n);
  for (Index i = 0; i < n; ++i) indegree[i] = pred[i].size();
  std::vector<Index> topo;
  topo.reserve(n);
  std::vector<Index> ready;
  for (Index i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    Index v = ready.back();
    ready.pop_back();
    topo.push_back(v);
    for (Index w : succ[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (topo.size() != n) {
    std::vector<bool> remaining(n, true);
    for (Index v : topo) remaining[v] = false;
    std::vector<std::string> cycle;
    std::ostringstream msg;
    msg << "cycle in order relation:";
    for (Index v : find_cycle(succ, remaining)) {
      cycle.push_back(p.ids_[v]);
      msg << ' ' << p.ids_[v];
    }
    throw CycleError(msg.str(), std::move(cycle));
  }

  p.up_.assign(n, Bits(n));
  p.down_.assign(n, Bits(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Index v = *it;
    p.up_[v].set(v);
    for (Index w : succ[v]) p.up_[v] |= p.up_[w];
  }
  for (Index v : topo) {
    p.down_[v].set(v);
    for (Index w : pred[v]) p.down_[v] |= p.down_[w];
  }

  // A generator v->w is a cover unless w sits strictly above another
  // successor of v; every cover appears among the generators.
  p.upper_.assign(n, {});
  p.lower_.assign(n, {});
  Bits above(n);
  for (Index v = 0; v < n; ++v) {
    above.reset();
    for (Index w : succ[v]) {
      Bits strict = p.up_[w];
      strict.reset(w);
      above |= strict;
    }
    for (Index w : succ[v]) {
      if (!above.test(w)) {
        p.upper_[v].push_back(w);
        p.lower_[w].push_back(v);
      }
    }
  }
  for (auto& l : p.lower_) std::sort(l.begin(), l.end());
  return p;
}

std::optional<Index> Poset::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index Poset::at(std::string_view id) const {
  auto i = find(id);
  if (!i) throw std::out_of_range("no element with id " + std::string(id));
  return *i;
}

Relation Poset::covers() const {
  Relation out;
  for (Index v = 0; v < size(); ++v)
    for (Index w : upper_[v]) out.emplace_back(v, w);
  return out;
}

std::size_t Poset::cover_count() const {
  std::size_t c = 0;
  for (const auto& u : upper_) c += u.size();
  return c;
}

std::vector<Index> Poset::minimal() const {
  std::vector<Index> out;
  for (Index v = 0; v < size(); ++v)
    if (lower_[v].empty()) out.push_back(v);
  return out;
}

std::vector<Index> Poset::maximal() const {
  std::vector<Index> out;
  for (Index v = 0; v < size(); ++v)
    if (upper_[v].empty()) out.push_back(v);
  return out;
}

Poset close_order(std::vector<std::string> ids,
                  const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, Index> index;
  for (Index i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);
  Relation rel;
  for (const auto& [a, b] : covers) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw std::invalid_argument("cover refers to unknown element: " + a + " < " + b);
    rel.emplace_back(ia->second, ib->second);
  }
  return Poset::close(std::move(ids), rel);
}

FacePoset::FacePoset(Poset order, std::vector<int> ranks)
    : Poset(std::move(order)), ranks_(std::move(ranks)) {
  if (ranks_.size() != size()) throw std::invalid_argument("rank vector size mismatch");
  for (Index v = 0; v < size(); ++v) {
    if (ranks_[v] < 0) throw GradingError("negative rank at " + id(v));
    if (lower_covers(v).empty() && ranks_[v] != 0)
      throw GradingError("minimal element " + id(v) + " has rank " + std::to_string(ranks_[v]));
    for (Index w : upper_covers(v)) {
      if (ranks_[w] != ranks_[v] + 1) {
        throw GradingError("cover " + id(v) + " < " + id(w) + " jumps from rank " +
                           std::to_string(ranks_[v]) + " to " + std::to_string(ranks_[w]));
      }
    }
  }
}

FacePoset FacePoset::build(const std::vector<Element>& elements, const Relation& generators) {
  std::vector<std::string> ids;
  std::vector<int> ranks;
  ids.reserve(elements.size());
  ranks.reserve(elements.size());
  for (const auto& e : elements) {
    ids.push_back(e.id);
    ranks.push_back(e.rank);
  }
  return FacePoset(Poset::close(std::move(ids), generators), std::move(ranks));
}

FacePoset FacePoset::build_by_height(std::vector<std::string> ids, const Relation& generators) {
  Poset order = Poset::close(std::move(ids), generators);
  const std::size_t n = order.size();
  // process by down-set size: every strict lower element has a smaller one
  std::vector<Index> by_size(n);
  for (Index i = 0; i < n; ++i) by_size[i] = i;
  std::stable_sort(by_size.begin(), by_size.end(), [&](Index a, Index b) {
    return order.down_set(a).count() < order.down_set(b).count();
  });
  std::vector<int> height(n, 0);
  for (Index v : by_size)
    for (Index w : order.lower_covers(v)) height[v] = std::max(height[v], height[w] + 1);
  return FacePoset(std::move(order), std::move(height));
}

int FacePoset::dimension() const {
  int d = -1;
  for (int r : ranks_) d = std::max(d, r);
  return d;
}

std::optional<Index> FacePoset::top() const {
  auto m = maximal();
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

std::vector<Index> FacePoset::of_rank(int r) const {
  std::vector<Index> out;
  for (Index v = 0; v < size(); ++v)
    if (ranks_[v] == r) out.push_back(v);
  return out;
}

std::vector<std::size_t> f_vector(const FacePoset& p) {
  std::vector<std::size_t> f(static_cast<std::size_t>(p.dimension() + 1), 0);
  for (int r : p.ranks()) ++f[static_cast<std::size_t>(r)];
  return f;
}

long long boundary_euler_characteristic(const FacePoset& p) {
  auto f = f_vector(p);
  long long chi = 0;
  for (std::size_t d = 0; d + 1 < f.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(f[d]);
  return chi;
}

long long sphere_euler_characteristic(int d) {
  // S^(d-1); the empty "sphere" S^-1 has characteristic 0
  return 1 + ((d - 1) % 2 == 0 ? 1 : -1);
}

bool is_simple(const FacePoset& p) {
  auto top = p.top();
  if (!top) return false;
  const int d = p.rank(*top);
  if (d == 0) return true;
  for (Index v : p.of_rank(0)) {
    int facets = 0;
    for (auto w = p.up_set(v).find_first(); w != Bits::npos; w = p.up_set(v).find_next(w))
      if (p.rank(w) == d - 1) ++facets;
    if (facets != d) return false;
  }
  return true;
}

IsoReport check_order_iso(const FacePoset& p, const FacePoset& q, std::span<const Index> map) {
  IsoReport r;
  r.p_size = p.size();
  r.q_size = q.size();
  if (p.size() != q.size()) {
    r.witness = "sizes differ: " + std::to_string(p.size()) + " vs " + std::to_string(q.size());
    return r;
  }
  if (map.size() != p.size()) {
    r.witness = "map is not total";
    return r;
  }
  std::vector<Index> inverse(q.size(), q.size());
  for (Index x = 0; x < p.size(); ++x) {
    Index y = map[x];
    if (y >= q.size()) {
      r.witness = "image of " + p.id(x) + " is outside the target";
      return r;
    }
    if (inverse[y] != q.size()) {
      r.witness = "not injective: " + p.id(inverse[y]) + " and " + p.id(x) + " both map to " + q.id(y);
      return r;
    }
    inverse[y] = x;
    if (p.rank(x) != q.rank(y)) {
      r.witness = "rank mismatch: " + p.id(x) + " (" + std::to_string(p.rank(x)) + ") -> " +
                  q.id(y) + " (" + std::to_string(q.rank(y)) + ")";
      return r;
    }
  }
  for (Index x = 0; x < p.size(); ++x) {
    for (Index z = 0; z < p.size(); ++z) {
      bool a = p.leq(x, z);
      bool b = q.leq(map[x], map[z]);
      if (a != b) {
        r.witness = (a ? "order not preserved: " : "order not reflected: ") + p.id(x) + " <= " +
                    p.id(z) + (a ? " but images are unrelated" : " fails but images are related");
        return r;
      }
    }
  }
  r.pass = true;
  return r;
}

IsoReport check_order_iso(const FacePoset& p, const FacePoset& q,
                          const std::function<std::string(const std::string&)>& map) {
  std::vector<Index> m(p.size());
  for (Index x = 0; x < p.size(); ++x) {
    std::string image = map(p.id(x));
    auto y = q.find(image);
    if (!y) {
      IsoReport r;
      r.p_size = p.size();
      r.q_size = q.size();
      r.witness = "image of " + p.id(x) + " is " + image + ", which is not an element of the target";
      return r;
    }
    m[x] = *y;
  }
  return check_order_iso(p, q, m);
}

namespace {

// Isomorphism invariant of an element: rank, cover degrees and the rank
// profile of its up- and down-sets.
std::vector<int> signature(const FacePoset& p, Index v) {
  const int dim = p.dimension();
  std::vector<int> sig;
  sig.reserve(3 + 2 * static_cast<std::size_t>(dim + 1));
  sig.push_back(p.rank(v));
  sig.push_back(static_cast<int>(p.upper_covers(v).size()));
  sig.push_back(static_cast<int>(p.lower_covers(v).size()));
  std::vector<int> down(static_cast<std::size_t>(dim + 1)), up(static_cast<std::size_t>(dim + 1));
  for (auto w = p.down_set(v).find_first(); w != Bits::npos; w = p.down_set(v).find_next(w))
    ++down[static_cast<std::size_t>(p.rank(w))];
  for (auto w = p.up_set(v).find_first(); w != Bits::npos; w = p.up_set(v).find_next(w))
    ++up[static_cast<std::size_t>(p.rank(w))];
  sig.insert(sig.end(), down.begin(), down.end());
  sig.insert(sig.end(), up.begin(), up.end());
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const FacePoset& p, const FacePoset& q) : p_(p), q_(q) {}

  std::optional<std::vector<Index>> run(std::span<const std::pair<Index, Index>> anchors) {
    const std::size_t n = p_.size();
    if (n != q_.size()) return std::nullopt;
    if (f_vector(p_) != f_vector(q_)) return std::nullopt;

    std::map<std::vector<int>, int> classes;
    cls_p_.resize(n);
    cls_q_.resize(n);
    for (Index v = 0; v < n; ++v) cls_p_[v] = classes.emplace(signature(p_, v), classes.size()).first->second;
    for (Index v = 0; v < n; ++v) {
      auto it = classes.find(signature(q_, v));
      if (it == classes.end()) return std::nullopt;
      cls_q_[v] = it->second;
    }
    std::vector<int> cp(classes.size(), 0), cq(classes.size(), 0);
    for (Index v = 0; v < n; ++v) {
      ++cp[static_cast<std::size_t>(cls_p_[v])];
      ++cq[static_cast<std::size_t>(cls_q_[v])];
    }
    if (cp != cq) return std::nullopt;

    map_.assign(n, kNone);
    inv_.assign(n, kNone);
    for (auto [x, y] : anchors) {
      if (x >= n || y >= n) return std::nullopt;
      if (map_[x] != kNone || inv_[y] != kNone) {
        if (map_[x] == y) continue;
        return std::nullopt;
      }
      if (cls_p_[x] != cls_q_[y]) return std::nullopt;
      if (!consistent(x, y)) return std::nullopt;
      map_[x] = y;
      inv_[y] = x;
    }
    build_order(cp);
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  static constexpr Index kNone = static_cast<Index>(-1);

  // Visit order: unmapped elements, each chosen to have as many already
  // ordered cover-neighbours as possible (ties: rarest class, lowest index).
  void build_order(const std::vector<int>& class_sizes) {
    const std::size_t n = p_.size();
    std::vector<bool> placed(n, false);
    std::vector<int> links(n, 0);
    auto place = [&](Index v) {
      placed[v] = true;
      for (Index w : p_.upper_covers(v)) ++links[w];
      for (Index w : p_.lower_covers(v)) ++links[w];
    };
    for (Index v = 0; v < n; ++v)
      if (map_[v] != kNone) place(v);
    while (true) {
      Index best = kNone;
      for (Index v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == kNone || links[v] > links[best] ||
            (links[v] == links[best] &&
             class_sizes[static_cast<std::size_t>(cls_p_[v])] <
                 class_sizes[static_cast<std::size_t>(cls_p_[best])]))
          best = v;
      }
      if (best == kNone) break;
      order_.push_back(best);
      place(best);
    }
  }

  // Every mapped cover-neighbour of x must map to a cover-neighbour of y in
  // the same direction, and y must have no other mapped neighbours.
  bool consistent(Index x, Index y) const {
    int mapped_up = 0, mapped_down = 0;
    for (Index z : p_.upper_covers(x)) {
      if (map_[z] == kNone) continue;
      ++mapped_up;
      const auto& uc = q_.upper_covers(y);
      if (!std::binary_search(uc.begin(), uc.end(), map_[z])) return false;
    }
    for (Index z : p_.lower_covers(x)) {
      if (map_[z] == kNone) continue;
      ++mapped_down;
      const auto& lc = q_.lower_covers(y);
      if (!std::binary_search(lc.begin(), lc.end(), map_[z])) return false;
    }
    int used_up = 0, used_down = 0;
    for (Index w : q_.upper_covers(y))
      if (inv_[w] != kNone) ++used_up;
    for (Index w : q_.lower_covers(y))
      if (inv_[w] != kNone) ++used_down;
    return used_up == mapped_up && used_down == mapped_down;
  }

  std::vector<Index> candidates(Index x) const {
    for (Index z : p_.upper_covers(x))
      if (map_[z] != kNone) return q_.lower_covers(map_[z]);
    for (Index z : p_.lower_covers(x))
      if (map_[z] != kNone) return q_.upper_covers(map_[z]);
    std::vector<Index> all;
    for (Index y = 0; y < q_.size(); ++y)
      if (cls_q_[y] == cls_p_[x]) all.push_back(y);
    return all;
  }

  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    Index x = order_[pos];
    for (Index y : candidates(x)) {
      if (inv_[y] != kNone || cls_q_[y] != cls_p_[x]) continue;
      if (!consistent(x, y)) continue;
      map_[x] = y;
      inv_[y] = x;
      if (extend(pos + 1)) return true;
      map_[x] = kNone;
      inv_[y] = kNone;
    }
    return false;
  }

  const FacePoset& p_;
  const FacePoset& q_;
  std::vector<int> cls_p_, cls_q_;
  std::vector<Index> map_, inv_, order_;
};

}  // namespace

std::optional<std::vector<Index>> search_iso(const FacePoset& p, const FacePoset& q,
                                             std::span<const std::pair<Index, Index>> anchors) {
  IsoSearch search(p, q);
  auto m = search.run(anchors);
  if (m && !check_order_iso(p, q, *m).pass) return std::nullopt;
  return m;
}

}  // namespace assoc::poset
