#pragma once

// Bracketing functions E: {1..n} -> {1..n}, the elements of the Tamari
// lattice T_n under the pointwise order.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tamari {

enum class BracketingAxiom { E1, E2 };

/// (E1) failures carry k only (j == 0); (E2) failures carry k <= j <= E(k)
/// with E(j) > E(k).
struct BracketingViolation {
  BracketingAxiom axiom;
  int k;
  int j = 0;

  friend bool operator==(const BracketingViolation&, const BracketingViolation&) = default;
};

inline std::string describe(const BracketingViolation& v) {
  std::ostringstream os;
  if (v.axiom == BracketingAxiom::E1)
    os << "(E1) violated at k=" << v.k << ": E(k) < k";
  else
    os << "(E2) violated at k=" << v.k << ", j=" << v.j << ": E(j) > E(k)";
  return os.str();
}

/// Checks (E1) for every k, then (E2) over (k,j) in lexicographic order.
/// Values outside {1..n} throw std::invalid_argument.
inline std::optional<BracketingViolation> validate_bracketing(const std::vector<int>& e) {
  const int n = static_cast<int>(e.size());
  if (n < 1) throw std::invalid_argument("bracketing function must be non-empty");
  for (int v : e)
    if (v < 1 || v > n)
      throw std::invalid_argument("bracketing value " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
  for (int k = 1; k <= n; ++k)
    if (e[k - 1] < k) return BracketingViolation{BracketingAxiom::E1, k};
  for (int k = 1; k <= n; ++k)
    for (int j = k; j <= e[k - 1]; ++j)
      if (e[j - 1] > e[k - 1]) return BracketingViolation{BracketingAxiom::E2, k, j};
  return std::nullopt;
}

class BracketingFn {
 public:
  /// Throws std::invalid_argument when `values` fails (E1) or (E2).
  explicit BracketingFn(std::vector<int> values) : e_(std::move(values)) {
    if (auto v = validate_bracketing(e_))
      throw std::invalid_argument("not a bracketing function: " + describe(*v));
  }

  /// Bottom of T_n: E(k) = k.
  static BracketingFn identity(int n) {
    std::vector<int> e(n);
    for (int k = 0; k < n; ++k) e[k] = k + 1;
    return BracketingFn(std::move(e));
  }

  /// Top of T_n: E(k) = n.
  static BracketingFn top(int n) { return BracketingFn(std::vector<int>(n, n)); }

  int n() const { return static_cast<int>(e_.size()); }
  /// 1-based: E(k).
  int operator()(int k) const { return e_[k - 1]; }
  const std::vector<int>& values() const { return e_; }

  bool is_identity() const {
    for (int k = 1; k <= n(); ++k)
      if (e_[k - 1] != k) return false;
    return true;
  }

  friend bool operator==(const BracketingFn&, const BracketingFn&) = default;
  friend auto operator<=>(const BracketingFn&, const BracketingFn&) = default;

 private:
  struct Unchecked {};
  BracketingFn(std::vector<int> values, Unchecked) : e_(std::move(values)) {}

  std::vector<int> e_;

  friend BracketingFn meet(const BracketingFn&, const BracketingFn&);
  friend std::optional<BracketingFn> cover_down(const BracketingFn&);
};

inline std::string to_string(const BracketingFn& e) {
  std::string out;
  for (int k = 1; k <= e.n(); ++k) {
    if (k > 1) out += ',';
    out += std::to_string(e(k));
  }
  return out;
}

inline void check_same_n(const BracketingFn& x, const BracketingFn& y) {
  if (x.n() != y.n())
    throw std::invalid_argument("bracketing functions over different n (" + std::to_string(x.n()) +
                                " vs " + std::to_string(y.n()) + ")");
}

/// Pointwise order.
inline bool leq(const BracketingFn& x, const BracketingFn& y) {
  check_same_n(x, y);
  for (int k = 1; k <= x.n(); ++k)
    if (x(k) > y(k)) return false;
  return true;
}

/// Pointwise minimum. It is always a bracketing function: if k <= j <= min
/// then E(j) <= E(k) and F(j) <= F(k).
inline BracketingFn meet(const BracketingFn& x, const BracketingFn& y) {
  check_same_n(x, y);
  std::vector<int> out(x.n());
  for (int k = 1; k <= x.n(); ++k) out[k - 1] = std::min(x(k), y(k));
  return BracketingFn(std::move(out), BracketingFn::Unchecked{});
}

/// Sum of E(k) - k.
inline std::size_t height(const BracketingFn& e) {
  std::size_t h = 0;
  for (int k = 1; k <= e.n(); ++k) h += static_cast<std::size_t>(e(k) - k);
  return h;
}

/// Lowers E(j) by one at the j with E(j) > j minimising E(j) - j (smallest
/// such j on ties). Empty at the bottom element.
inline std::optional<BracketingFn> cover_down(const BracketingFn& e) {
  int best = 0;
  for (int j = 1; j <= e.n(); ++j) {
    const int gap = e(j) - j;
    if (gap > 0 && (best == 0 || gap < e(best) - best)) best = j;
  }
  if (best == 0) return std::nullopt;
  std::vector<int> out = e.values();
  --out[best - 1];
  return BracketingFn(std::move(out), BracketingFn::Unchecked{});
}

inline constexpr int kMaxEnumerateN = 14;

/// Calls `visit` with every element of T_n in lexicographic order of the
/// value sequence. Position k ranges over k..min{E(i) : i < k <= E(i)}, which
/// is exactly the set of values keeping (E1) and (E2) satisfiable, so the
/// search never backtracks out of a dead end.
inline void for_each_bracketing(int n, const std::function<void(const BracketingFn&)>& visit) {
  if (n < 1 || n > kMaxEnumerateN)
    throw std::invalid_argument("enumeration needs 1 <= n <= " + std::to_string(kMaxEnumerateN));
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      visit(BracketingFn(e));
      return;
    }
    int cap = n;
    for (int i = 1; i < k; ++i)
      if (e[i - 1] >= k) cap = std::min(cap, e[i - 1]);
    for (int v = k; v <= cap; ++v) {
      e[k - 1] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 1);
}

inline std::vector<BracketingFn> enumerate_tamari(int n) {
  std::vector<BracketingFn> out;
  for_each_bracketing(n, [&](const BracketingFn& e) { out.push_back(e); });
  return out;
}

}  // namespace tamari
