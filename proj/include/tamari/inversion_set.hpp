#pragma once

// Permutations of {1..n} and their inversion sets, ordered by inclusion
// (the weak or position order). All values are 1-based.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tamari {

inline constexpr int kMaxN = 64;

/// Ordered pair (a,b) with a > b, meaning a precedes b in the permutation.
struct Pair {
  int a = 0;
  int b = 0;

  friend constexpr bool operator==(const Pair&, const Pair&) = default;
  friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

inline void check_size(int n) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("n must lie in 1.." + std::to_string(kMaxN) +
                                ", got " + std::to_string(n));
}

class Permutation {
 public:
  /// Throws std::invalid_argument unless `entries` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    if (n < 1) throw std::invalid_argument("permutation must be non-empty");
    std::vector<bool> seen(n + 1, false);
    for (int v : entries_) {
      if (v < 1 || v > n || seen[v])
        throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = i + 1;
    return Permutation(std::move(e));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  /// 1-based position access.
  int operator[](int pos) const { return entries_[pos - 1]; }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// Set of pairs (a,b), n >= a > b >= 1, stored as one bitmask row per `a`
/// (bit b-1 of row a-1 is set iff (a,b) is present).
///
/// The type itself does not enforce (I1)/(I2): the complement trick and the
/// intermediate union in `join` need arbitrary pair sets. Use
/// `validate_inversion_set` or construct through `inversions` / `realize`.
class InversionSet {
 public:
  explicit InversionSet(int n) : n_(n) { check_size(n); }

  InversionSet(int n, std::span<const Pair> pairs) : InversionSet(n) {
    for (const Pair& p : pairs) insert(p.a, p.b);
  }
  InversionSet(int n, std::initializer_list<Pair> pairs)
      : InversionSet(n, std::span<const Pair>(pairs.begin(), pairs.size())) {}

  /// All pairs (a,b) with a > b: the inversion set of the reversal.
  static InversionSet full(int n) {
    InversionSet s(n);
    for (int a = 2; a <= n; ++a) s.rows_[a - 1] = low_bits(a - 1);
    return s;
  }

  int n() const { return n_; }

  bool contains(int a, int b) const {
    if (a <= b || b < 1 || a > n_) return false;
    return (rows_[a - 1] >> (b - 1)) & 1u;
  }

  void insert(int a, int b) {
    check_pair(a, b);
    rows_[a - 1] |= std::uint64_t{1} << (b - 1);
  }

  void erase(int a, int b) {
    check_pair(a, b);
    rows_[a - 1] &= ~(std::uint64_t{1} << (b - 1));
  }

  /// Bitmask of every b with (a,b) present.
  std::uint64_t row(int a) const { return rows_[a - 1]; }

  std::size_t size() const {
    std::size_t count = 0;
    for (int a = 0; a < n_; ++a) count += std::popcount(rows_[a]);
    return count;
  }
  bool empty() const { return size() == 0; }

  /// Pairs sorted descending by a, then descending by b.
  std::vector<Pair> pairs() const {
    std::vector<Pair> out;
    out.reserve(size());
    for (int a = n_; a >= 2; --a)
      for (int b = a - 1; b >= 1; --b)
        if (contains(a, b)) out.push_back({a, b});
    return out;
  }

  bool is_subset_of(const InversionSet& other) const {
    same_size(other);
    for (int a = 0; a < n_; ++a)
      if (rows_[a] & ~other.rows_[a]) return false;
    return true;
  }

  InversionSet set_union(const InversionSet& other) const {
    same_size(other);
    InversionSet out(n_);
    for (int a = 0; a < n_; ++a) out.rows_[a] = rows_[a] | other.rows_[a];
    return out;
  }

  InversionSet set_intersection(const InversionSet& other) const {
    same_size(other);
    InversionSet out(n_);
    for (int a = 0; a < n_; ++a) out.rows_[a] = rows_[a] & other.rows_[a];
    return out;
  }

  /// Full(n) minus this set.
  InversionSet complement() const {
    InversionSet out(n_);
    for (int a = 1; a <= n_; ++a) out.rows_[a - 1] = low_bits(a - 1) & ~rows_[a - 1];
    return out;
  }

  /// Transitive closure. Every pair points from a larger to a smaller value,
  /// so rows closed in increasing order of `a` are final when first read.
  InversionSet transitive_closure() const {
    InversionSet out = *this;
    for (int a = 2; a <= n_; ++a) {
      std::uint64_t direct = rows_[a - 1];
      std::uint64_t reach = direct;
      while (direct) {
        const int b = std::countr_zero(direct) + 1;
        direct &= direct - 1;
        reach |= out.rows_[b - 1];
      }
      out.rows_[a - 1] = reach;
    }
    return out;
  }

  void same_size(const InversionSet& other) const {
    if (other.n_ != n_)
      throw std::invalid_argument("inversion sets over different n (" + std::to_string(n_) +
                                  " vs " + std::to_string(other.n_) + ")");
  }

  friend bool operator==(const InversionSet& x, const InversionSet& y) {
    return x.n_ == y.n_ && std::equal(x.rows_.begin(), x.rows_.begin() + x.n_, y.rows_.begin());
  }

  /// Arbitrary total order, for use as a map key.
  friend bool operator<(const InversionSet& x, const InversionSet& y) {
    if (x.n_ != y.n_) return x.n_ < y.n_;
    return std::lexicographical_compare(x.rows_.begin(), x.rows_.begin() + x.n_,
                                        y.rows_.begin(), y.rows_.begin() + y.n_);
  }

 private:
  static constexpr std::uint64_t low_bits(int count) {
    return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
  }

  void check_pair(int a, int b) const {
    if (!(a > b && b >= 1 && a <= n_))
      throw std::invalid_argument("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") outside n >= a > b >= 1 for n=" + std::to_string(n_));
  }

  int n_;
  std::array<std::uint64_t, kMaxN> rows_{};
};

inline std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

inline std::string to_string(const InversionSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Pair& p : s.pairs()) {
    os << (first ? "" : ",") << '(' << p.a << ',' << p.b << ')';
    first = false;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Validation

enum class InversionAxiom { I1, I2 };

/// A failed axiom together with its witness. For (I1) the witness reads
/// "(a,b) and (b,c) present, (a,c) missing"; for (I2) it reads "(a,b) present
/// with b < c < a, but neither (a,c) nor (c,b)".
struct InversionViolation {
  InversionAxiom axiom;
  int a;
  int b;
  int c;

  friend bool operator==(const InversionViolation&, const InversionViolation&) = default;
};

inline std::string describe(const InversionViolation& v) {
  std::ostringstream os;
  if (v.axiom == InversionAxiom::I1)
    os << "(I1) violated: (" << v.a << ',' << v.b << ") and (" << v.b << ',' << v.c
       << ") present but (" << v.a << ',' << v.c << ") missing";
  else
    os << "(I2) violated: (" << v.a << ',' << v.b << ") present with b=" << v.b
       << " < c=" << v.c << " < a=" << v.a << " but neither (" << v.a << ',' << v.c
       << ") nor (" << v.c << ',' << v.b << ')';
  return os.str();
}

/// Empty when `s` satisfies (I1) and (I2). (I1) is checked first; within an
/// axiom the witness (a,b,c) is the lexicographically smallest one.
inline std::optional<InversionViolation> validate_inversion_set(const InversionSet& s) {
  const int n = s.n();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b < a; ++b) {
      if (!s.contains(a, b)) continue;
      for (int c = 1; c < b; ++c)
        if (s.contains(b, c) && !s.contains(a, c)) return InversionViolation{InversionAxiom::I1, a, b, c};
    }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b < a; ++b) {
      if (!s.contains(a, b)) continue;
      for (int c = b + 1; c < a; ++c)
        if (!s.contains(a, c) && !s.contains(c, b)) return InversionViolation{InversionAxiom::I2, a, b, c};
    }
  return std::nullopt;
}

/// Raw-pair overload. Pairs outside n >= a > b >= 1 are a precondition
/// failure and throw std::invalid_argument.
inline std::optional<InversionViolation> validate_inversion_set(std::span<const Pair> pairs, int n) {
  return validate_inversion_set(InversionSet(n, pairs));
}

// ---------------------------------------------------------------------------
// Permutation <-> inversion set

inline InversionSet inversions(const Permutation& p) {
  const int n = p.size();
  InversionSet out(n);
  // Row of each value: the smaller values appearing after it.
  std::uint64_t seen_after = 0;
  for (int pos = n; pos >= 1; --pos) {
    const int v = p[pos];
    const std::uint64_t smaller = v == 1 ? 0 : (seen_after & ((std::uint64_t{1} << (v - 1)) - 1));
    for (std::uint64_t m = smaller; m; m &= m - 1) out.insert(v, std::countr_zero(m) + 1);
    seen_after |= std::uint64_t{1} << (v - 1);
  }
  return out;
}

/// The permutation whose inversion set is `s`. Builds the permutation of
/// {1..k} for k = 1, 2, ..., inserting k+1 immediately left of the leftmost
/// entry j with (k+1,j) in `s`, or appending it when there is none.
///
/// Throws std::invalid_argument naming the violating triple when `s` fails
/// (I1) or (I2).
inline Permutation realize(const InversionSet& s) {
  if (auto violation = validate_inversion_set(s))
    throw std::invalid_argument("not an inversion set: " + describe(*violation));
  std::vector<int> entries{1};
  entries.reserve(s.n());
  for (int next = 2; next <= s.n(); ++next) {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](int j) { return s.contains(next, j); });
    entries.insert(it, next);
  }
  return Permutation(std::move(entries));
}

inline Permutation realize(std::span<const Pair> pairs, int n) { return realize(InversionSet(n, pairs)); }

// ---------------------------------------------------------------------------
// Lattice operations in S_n

inline bool leq(const InversionSet& x, const InversionSet& y) { return x.is_subset_of(y); }

/// Least upper bound: the transitive closure of the union.
inline InversionSet join(const InversionSet& x, const InversionSet& y) {
  return x.set_union(y).transitive_closure();
}

/// Greatest lower bound. Reversing a permutation complements its inversion
/// set and reverses the order, so the meet is the complement of the join of
/// complements.
inline InversionSet meet(const InversionSet& x, const InversionSet& y) {
  return join(x.complement(), y.complement()).complement();
}

inline std::size_t rank(const InversionSet& s) { return s.size(); }

/// Upper covers, one per ascent of realize(s), in left-to-right ascent order.
inline std::vector<InversionSet> covers_up(const InversionSet& s) {
  const Permutation p = realize(s);
  std::vector<InversionSet> out;
  for (int pos = 1; pos < p.size(); ++pos) {
    if (p[pos] < p[pos + 1]) {
      InversionSet up = s;
      up.insert(p[pos + 1], p[pos]);
      out.push_back(std::move(up));
    }
  }
  return out;
}

/// Lower covers, one per descent of realize(s), in left-to-right order.
inline std::vector<InversionSet> covers_down(const InversionSet& s) {
  const Permutation p = realize(s);
  std::vector<InversionSet> out;
  for (int pos = 1; pos < p.size(); ++pos) {
    if (p[pos] > p[pos + 1]) {
      InversionSet down = s;
      down.erase(p[pos], p[pos + 1]);
      out.push_back(std::move(down));
    }
  }
  return out;
}

/// All n! permutations of {1..n} in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  check_size(n);
  if (n > 10) throw std::invalid_argument("refusing to list n! permutations for n > 10");
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

}  // namespace tamari
