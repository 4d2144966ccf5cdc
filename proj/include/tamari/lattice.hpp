#pragma once

// Generic analyzers for finite lattices given by a comparison oracle: Hasse
// diagrams, lattice laws, semidistributivity, boundedness, heights.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tamari/parallel.hpp"

namespace tamari {

class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Elements plus a comparison oracle. `join` and `meet` are optional; when
/// empty they are derived from `leq`.
template <class T>
struct LatticeView {
  std::vector<T> elements;
  std::function<bool(const T&, const T&)> leq;
  std::function<T(const T&, const T&)> join = {};
  std::function<T(const T&, const T&)> meet = {};
};

using Index = std::size_t;

struct Triple {
  Index x;
  Index y;
  Index z;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// A lattice on indices 0..size()-1 with precomputed order, join and meet
/// tables.
class FiniteLattice {
 public:
  /// Throws LatticeError if the oracle is not a partial order, or if some
  /// pair has no least upper / greatest lower bound, or if a supplied
  /// join/meet oracle returns a value outside the element set.
  template <class T>
  static FiniteLattice from_view(const LatticeView<T>& view) {
    const std::size_t m = view.elements.size();
    std::vector<char> order(m * m);
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < m; ++j) order[i * m + j] = view.leq(view.elements[i], view.elements[j]);
    FiniteLattice lattice(m, std::move(order));

    auto index_of = make_index(view.elements);
    auto fill = [&](const std::function<T(const T&, const T&)>& op, std::vector<Index>& table,
                    const char* name) {
      for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) {
          auto k = index_of(op(view.elements[i], view.elements[j]));
          if (!k) throw LatticeError(std::string(name) + " oracle left the element set");
          table[i * m + j] = *k;
        }
    };
    if (view.join) fill(view.join, lattice.join_, "join");
    else lattice.derive_join();
    if (view.meet) fill(view.meet, lattice.meet_, "meet");
    else lattice.derive_meet();
    return lattice;
  }

  /// From an explicit order matrix (row-major, m*m). Join and meet derived.
  static FiniteLattice from_order(std::size_t m, std::vector<char> order) {
    FiniteLattice lattice(m, std::move(order));
    lattice.derive_join();
    lattice.derive_meet();
    return lattice;
  }

  std::size_t size() const { return size_; }
  bool leq(Index x, Index y) const { return order_[x * size_ + y]; }
  bool lt(Index x, Index y) const { return x != y && leq(x, y); }
  Index join(Index x, Index y) const { return join_[x * size_ + y]; }
  Index meet(Index x, Index y) const { return meet_[x * size_ + y]; }

  Index bottom() const { return extreme(true); }
  Index top() const { return extreme(false); }

  /// The order-reversed lattice on the same indices.
  FiniteLattice dual() const {
    FiniteLattice d = *this;
    for (Index i = 0; i < size_; ++i)
      for (Index j = 0; j < size_; ++j) d.order_[i * size_ + j] = order_[j * size_ + i];
    std::swap(d.join_, d.meet_);
    std::swap(d.up_, d.down_);
    return d;
  }

  /// Cover edges (x,y), x < y with nothing strictly between, sorted by x
  /// then y.
  std::vector<std::pair<Index, Index>> hasse() const {
    std::vector<std::pair<Index, Index>> edges;
    for (Index x = 0; x < size_; ++x)
      for (Index y : up_[x]) edges.emplace_back(x, y);
    return edges;
  }

  /// True when y covers x.
  bool covers(Index y, Index x) const { return std::binary_search(up_[x].begin(), up_[x].end(), y); }

  /// Sorted lower covers of y.
  const std::vector<Index>& lower_covers(Index y) const { return down_[y]; }
  /// Sorted upper covers of x.
  const std::vector<Index>& upper_covers(Index x) const { return up_[x]; }

  std::vector<Index> atoms() const { return upper_covers(bottom()); }

  /// Elements with exactly one lower cover.
  std::vector<Index> join_irreducibles() const {
    std::vector<Index> out;
    for (Index x = 0; x < size_; ++x)
      if (lower_covers(x).size() == 1) out.push_back(x);
    return out;
  }

  /// Longest chain length from the bottom to every element, by dynamic
  /// programming over a linear extension of the Hasse diagram.
  std::vector<std::size_t> heights() const {
    std::vector<std::size_t> below(size_, 0);
    for (Index x = 0; x < size_; ++x)
      for (Index y = 0; y < size_; ++y) below[x] += leq(y, x);
    std::vector<Index> order(size_);
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return below[a] < below[b]; });
    std::vector<std::size_t> h(size_, 0);
    for (const auto& [x, y] : hasse_sorted(order))
      h[y] = std::max(h[y], h[x] + 1);
    return h;
  }

  std::size_t longest_chain_to(Index x) const {
    if (x >= size_) throw std::out_of_range("element " + std::to_string(x) + " not in lattice");
    return heights()[x];
  }

 private:
  FiniteLattice(std::size_t m, std::vector<char> order)
      : size_(m), order_(std::move(order)), join_(m * m), meet_(m * m) {
    if (m == 0) throw LatticeError("empty lattice");
    if (order_.size() != m * m) throw LatticeError("order matrix has wrong size");
    for (Index i = 0; i < m; ++i)
      if (!leq(i, i)) throw LatticeError("leq not reflexive at element " + std::to_string(i));
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < m; ++j)
        if (i != j && leq(i, j) && leq(j, i))
          throw LatticeError("leq not antisymmetric at elements " + std::to_string(i) + ", " +
                             std::to_string(j));
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < m; ++j) {
        if (!leq(i, j)) continue;
        for (Index k = 0; k < m; ++k)
          if (leq(j, k) && !leq(i, k))
            throw LatticeError("leq not transitive at elements " + std::to_string(i) + ", " +
                               std::to_string(j) + ", " + std::to_string(k));
      }
    up_.resize(m);
    down_.resize(m);
    for (Index x = 0; x < m; ++x)
      for (Index y = 0; y < m; ++y) {
        if (!lt(x, y)) continue;
        bool between = false;
        for (Index z = 0; z < m && !between; ++z) between = lt(x, z) && lt(z, y);
        if (!between) {
          up_[x].push_back(y);
          down_[y].push_back(x);
        }
      }
  }

  template <class T>
  static std::function<std::optional<Index>(const T&)> make_index(const std::vector<T>& elements) {
    if constexpr (requires(const T& a, const T& b) { a < b; }) {
      auto map = std::make_shared<std::map<T, Index>>();
      for (Index i = 0; i < elements.size(); ++i) map->emplace(elements[i], i);
      return [map](const T& x) -> std::optional<Index> {
        auto it = map->find(x);
        if (it == map->end()) return std::nullopt;
        return it->second;
      };
    } else {
      return [&elements](const T& x) -> std::optional<Index> {
        auto it = std::find(elements.begin(), elements.end(), x);
        if (it == elements.end()) return std::nullopt;
        return static_cast<Index>(it - elements.begin());
      };
    }
  }

  void derive_join() {
    for (Index i = 0; i < size_; ++i)
      for (Index j = 0; j < size_; ++j) {
        auto best = least_bound(i, j, false);
        if (!best)
          throw LatticeError("no least upper bound for elements " + std::to_string(i) + ", " +
                             std::to_string(j));
        join_[i * size_ + j] = *best;
      }
  }

  void derive_meet() {
    for (Index i = 0; i < size_; ++i)
      for (Index j = 0; j < size_; ++j) {
        auto best = least_bound(i, j, true);
        if (!best)
          throw LatticeError("no greatest lower bound for elements " + std::to_string(i) + ", " +
                             std::to_string(j));
        meet_[i * size_ + j] = *best;
      }
  }

  // Least upper bound (or greatest lower bound when `lower`) of i and j.
  std::optional<Index> least_bound(Index i, Index j, bool lower) const {
    auto below = [&](Index a, Index b) { return lower ? leq(b, a) : leq(a, b); };
    std::vector<Index> bounds;
    for (Index k = 0; k < size_; ++k)
      if (below(i, k) && below(j, k)) bounds.push_back(k);
    for (Index candidate : bounds)
      if (std::all_of(bounds.begin(), bounds.end(), [&](Index k) { return below(candidate, k); }))
        return candidate;
    return std::nullopt;
  }

  Index extreme(bool lowest) const {
    for (Index x = 0; x < size_; ++x) {
      bool ok = true;
      for (Index y = 0; y < size_ && ok; ++y) ok = lowest ? leq(x, y) : leq(y, x);
      if (ok) return x;
    }
    throw LatticeError(lowest ? "no bottom element" : "no top element");
  }

  // Cover edges with the lower endpoint following `order`.
  std::vector<std::pair<Index, Index>> hasse_sorted(const std::vector<Index>& order) const {
    std::vector<std::pair<Index, Index>> edges;
    for (Index x : order)
      for (Index y : upper_covers(x)) edges.emplace_back(x, y);
    return edges;
  }

  std::size_t size_;
  std::vector<char> order_;
  std::vector<Index> join_;
  std::vector<Index> meet_;
  std::vector<std::vector<Index>> up_;
  std::vector<std::vector<Index>> down_;
};

// ---------------------------------------------------------------------------
// Lattice laws

enum class LatticeLaw {
  JoinIdempotent,
  MeetIdempotent,
  JoinCommutative,
  MeetCommutative,
  JoinAssociative,
  MeetAssociative,
  Absorption,
};

inline std::string to_string(LatticeLaw law) {
  switch (law) {
    case LatticeLaw::JoinIdempotent: return "join idempotence";
    case LatticeLaw::MeetIdempotent: return "meet idempotence";
    case LatticeLaw::JoinCommutative: return "join commutativity";
    case LatticeLaw::MeetCommutative: return "meet commutativity";
    case LatticeLaw::JoinAssociative: return "join associativity";
    case LatticeLaw::MeetAssociative: return "meet associativity";
    case LatticeLaw::Absorption: return "absorption";
  }
  return "unknown";
}

struct LawFailure {
  LatticeLaw law;
  Triple witness;
};

/// Checks idempotence, commutativity, associativity and absorption of the
/// lattice's join and meet tables over all triples.
inline std::optional<LawFailure> check_lattice_laws(const FiniteLattice& l) {
  const std::size_t m = l.size();
  auto failure = first_failure<LawFailure>(m, [&](Index x) -> std::optional<LawFailure> {
    if (l.join(x, x) != x) return LawFailure{LatticeLaw::JoinIdempotent, {x, x, x}};
    if (l.meet(x, x) != x) return LawFailure{LatticeLaw::MeetIdempotent, {x, x, x}};
    for (Index y = 0; y < m; ++y) {
      if (l.join(x, y) != l.join(y, x)) return LawFailure{LatticeLaw::JoinCommutative, {x, y, y}};
      if (l.meet(x, y) != l.meet(y, x)) return LawFailure{LatticeLaw::MeetCommutative, {x, y, y}};
      if (l.join(x, l.meet(x, y)) != x || l.meet(x, l.join(x, y)) != x)
        return LawFailure{LatticeLaw::Absorption, {x, y, y}};
      for (Index z = 0; z < m; ++z) {
        if (l.join(l.join(x, y), z) != l.join(x, l.join(y, z)))
          return LawFailure{LatticeLaw::JoinAssociative, {x, y, z}};
        if (l.meet(l.meet(x, y), z) != l.meet(x, l.meet(y, z)))
          return LawFailure{LatticeLaw::MeetAssociative, {x, y, z}};
      }
    }
    return std::nullopt;
  });
  if (!failure) return std::nullopt;
  return failure->second;
}

// ---------------------------------------------------------------------------
// Semidistributivity

struct SemidistributiveVerdict {
  /// First (x,y,z) with x∨y = x∨z but x∨y != x∨(y∧z).
  std::optional<Triple> join_failure;
  /// First (x,y,z) with x∧y = x∧z but x∧y != x∧(y∨z).
  std::optional<Triple> meet_failure;

  bool join_law() const { return !join_failure; }
  bool meet_law() const { return !meet_failure; }
  bool holds() const { return join_law() && meet_law(); }
};

namespace detail {

inline std::optional<Triple> sd_join_failure(const FiniteLattice& l) {
  const std::size_t m = l.size();
  auto f = first_failure<Triple>(m, [&](Index x) -> std::optional<Triple> {
    for (Index y = 0; y < m; ++y)
      for (Index z = 0; z < m; ++z) {
        const Index xy = l.join(x, y);
        if (xy == l.join(x, z) && xy != l.join(x, l.meet(y, z))) return Triple{x, y, z};
      }
    return std::nullopt;
  });
  if (!f) return std::nullopt;
  return f->second;
}

}  // namespace detail

inline SemidistributiveVerdict check_semidistributive(const FiniteLattice& l) {
  return {detail::sd_join_failure(l), detail::sd_join_failure(l.dual())};
}

// ---------------------------------------------------------------------------
// Boundedness

struct BoundedVerdict {
  bool lower_bounded = true;
  bool upper_bounded = true;
  /// A cycle of the join-dependency relation, when one exists.
  std::vector<Index> lower_cycle;
  /// A cycle of the dual (meet-dependency) relation, when one exists.
  std::vector<Index> upper_cycle;

  bool bounded() const { return lower_bounded && upper_bounded; }
};

/// p D q for join-irreducibles p != q when some x has p <= q ∨ x but
/// p not <= q_* ∨ x, q_* the unique lower cover of q. Returns adjacency lists
/// over the join-irreducibles, plus the join-irreducibles themselves.
inline std::pair<std::vector<Index>, std::vector<std::vector<Index>>> join_dependency(
    const FiniteLattice& l) {
  const std::vector<Index> irreducibles = l.join_irreducibles();
  std::vector<Index> lower_cover;
  for (Index q : irreducibles) {
    const auto& covers = l.lower_covers(q);
    if (covers.size() != 1)
      throw LatticeError("join-irreducible " + std::to_string(q) + " lacks a unique lower cover");
    lower_cover.push_back(covers.front());
  }
  std::vector<std::vector<Index>> edges(irreducibles.size());
  for (std::size_t pi = 0; pi < irreducibles.size(); ++pi)
    for (std::size_t qi = 0; qi < irreducibles.size(); ++qi) {
      if (pi == qi) continue;
      const Index p = irreducibles[pi];
      const Index q = irreducibles[qi];
      for (Index x = 0; x < l.size(); ++x)
        if (l.leq(p, l.join(q, x)) && !l.leq(p, l.join(lower_cover[qi], x))) {
          edges[pi].push_back(qi);
          break;
        }
    }
  return {irreducibles, edges};
}

namespace detail {

// Returns a directed cycle (as element indices) or an empty vector.
inline std::vector<Index> find_cycle(const std::vector<Index>& labels,
                                     const std::vector<std::vector<Index>>& edges) {
  const std::size_t k = edges.size();
  std::vector<int> state(k, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> stack;
  std::vector<Index> cycle;
  auto dfs = [&](auto&& self, std::size_t v) -> bool {
    state[v] = 1;
    stack.push_back(v);
    for (std::size_t w : edges[v]) {
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        for (; it != stack.end(); ++it) cycle.push_back(labels[*it]);
        return true;
      }
      if (state[w] == 0 && self(self, w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < k; ++v)
    if (state[v] == 0 && dfs(dfs, v)) break;
  return cycle;
}

}  // namespace detail

/// Lower bounded iff the join-dependency relation is acyclic; upper bounded
/// iff the same holds in the dual lattice.
inline BoundedVerdict check_bounded(const FiniteLattice& l) {
  BoundedVerdict v;
  {
    auto [labels, edges] = join_dependency(l);
    v.lower_cycle = detail::find_cycle(labels, edges);
    v.lower_bounded = v.lower_cycle.empty();
  }
  {
    auto [labels, edges] = join_dependency(l.dual());
    v.upper_cycle = detail::find_cycle(labels, edges);
    v.upper_bounded = v.upper_cycle.empty();
  }
  return v;
}

// ---------------------------------------------------------------------------
// DOT export

/// Graphviz digraph of the Hasse diagram, edges pointing from each element
/// to its upper covers. Nodes in `highlight` are filled.
inline std::string to_dot(const FiniteLattice& l, const std::function<std::string(Index)>& label,
                          const std::vector<bool>& highlight = {}, const std::string& name = "lattice") {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (Index i = 0; i < l.size(); ++i) {
    os << "  n" << i << " [label=\"" << label(i) << "\"";
    if (i < highlight.size() && highlight[i]) os << ", style=filled, fillcolor=lightblue";
    os << "];\n";
  }
  for (const auto& [x, y] : l.hasse()) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tamari
