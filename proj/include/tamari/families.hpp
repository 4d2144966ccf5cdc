#pragma once

// Concrete lattices as FiniteLattice instances: S_n, T_n, and the small
// textbook lattices used to exercise the analyzers.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tamari/bracketing_fn.hpp"
#include "tamari/embedding.hpp"
#include "tamari/inversion_set.hpp"
#include "tamari/lattice.hpp"

namespace tamari {

template <class T>
struct IndexedLattice {
  std::vector<T> elements;
  FiniteLattice lattice;
};

/// S_n over the inversion sets of all permutations in lexicographic order.
/// With `derive_ops` the join/meet tables come from the order alone instead
/// of the closure and complement routines.
inline IndexedLattice<InversionSet> permutation_lattice(int n, bool derive_ops = false) {
  if (n < 1 || n > 6) throw std::invalid_argument("permutation lattice needs 1 <= n <= 6");
  LatticeView<InversionSet> view;
  for (const Permutation& p : all_permutations(n)) view.elements.push_back(inversions(p));
  view.leq = [](const InversionSet& x, const InversionSet& y) { return leq(x, y); };
  if (!derive_ops) {
    view.join = [](const InversionSet& x, const InversionSet& y) { return join(x, y); };
    view.meet = [](const InversionSet& x, const InversionSet& y) { return meet(x, y); };
  }
  auto lattice = FiniteLattice::from_view(view);
  return {std::move(view.elements), std::move(lattice)};
}

/// T_n over enumerate_tamari(n), in lexicographic order.
inline IndexedLattice<BracketingFn> tamari_lattice(int n, bool derive_ops = false) {
  if (n < 1 || n > 7) throw std::invalid_argument("tamari lattice needs 1 <= n <= 7");
  LatticeView<BracketingFn> view;
  view.elements = enumerate_tamari(n);
  view.leq = [](const BracketingFn& x, const BracketingFn& y) { return leq(x, y); };
  if (!derive_ops) {
    view.join = [](const BracketingFn& x, const BracketingFn& y) { return join(x, y); };
    view.meet = [](const BracketingFn& x, const BracketingFn& y) { return meet(x, y); };
  }
  auto lattice = FiniteLattice::from_view(view);
  return {std::move(view.elements), std::move(lattice)};
}

inline FiniteLattice chain_lattice(std::size_t length) {
  std::vector<char> order(length * length);
  for (std::size_t i = 0; i < length; ++i)
    for (std::size_t j = 0; j < length; ++j) order[i * length + j] = i <= j;
  return FiniteLattice::from_order(length, std::move(order));
}

/// Subsets of a `dimension`-element set under inclusion.
inline FiniteLattice boolean_lattice(unsigned dimension) {
  const std::size_t m = std::size_t{1} << dimension;
  std::vector<char> order(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) order[i * m + j] = (i & ~j) == 0;
  return FiniteLattice::from_order(m, std::move(order));
}

namespace detail {

inline FiniteLattice from_covers(std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  std::vector<char> order(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) order[i * m + i] = 1;
  for (const auto& [x, y] : covers) order[x * m + y] = 1;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (order[i * m + k] && order[k * m + j]) order[i * m + j] = 1;
  return FiniteLattice::from_order(m, std::move(order));
}

}  // namespace detail

/// M3: 0 < a, b, c < 1. Indices 0, 1..3, 4.
inline FiniteLattice diamond_lattice() {
  return detail::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

/// N5: 0 < a < c < 1 and 0 < b < 1. Indices 0, a=1, c=2, b=3, 4.
inline FiniteLattice pentagon_lattice() {
  return detail::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

}  // namespace tamari
