#pragma once

// The embedding of T_n into S_n: a bracketing function E maps to the
// inversion set { (s,k) : k < s <= E(k) }.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tamari/bracketing_fn.hpp"
#include "tamari/inversion_set.hpp"

namespace tamari {

inline InversionSet phi(const BracketingFn& e) {
  InversionSet out(e.n());
  for (int k = 1; k <= e.n(); ++k)
    for (int s = k + 1; s <= e(k); ++s) out.insert(s, k);
  return out;
}

/// Witness (a,b,c) with b < c < a, (a,b) present and (c,b) missing.
struct I2StarViolation {
  int a;
  int b;
  int c;

  friend bool operator==(const I2StarViolation&, const I2StarViolation&) = default;
};

/// Lexicographically smallest (a,b,c) violating the strengthened property
/// "(a,b) present and b < c < a forces (c,b)".
inline std::optional<I2StarViolation> find_i2star_violation(const InversionSet& s) {
  for (int a = 1; a <= s.n(); ++a)
    for (int b = 1; b < a; ++b) {
      if (!s.contains(a, b)) continue;
      for (int c = b + 1; c < a; ++c)
        if (!s.contains(c, b)) return I2StarViolation{a, b, c};
    }
  return std::nullopt;
}

inline bool satisfies_i2star(const InversionSet& s) { return !find_i2star_violation(s); }

/// E(k) = largest s with (s,k) in the set, or k. Throws std::invalid_argument
/// with the witness triple when the set is not an inversion set or fails the
/// strengthened property.
inline BracketingFn phi_inverse(const InversionSet& s) {
  if (auto v = validate_inversion_set(s))
    throw std::invalid_argument("not an inversion set: " + describe(*v));
  if (auto v = find_i2star_violation(s))
    throw std::invalid_argument("outside the image of phi: (" + std::to_string(v->a) + "," +
                                std::to_string(v->b) + ") present with c=" + std::to_string(v->c) +
                                " but (" + std::to_string(v->c) + "," + std::to_string(v->b) +
                                ") missing");
  std::vector<int> e(s.n());
  for (int k = 1; k <= s.n(); ++k) {
    e[k - 1] = k;
    for (int a = s.n(); a > k; --a)
      if (s.contains(a, k)) {
        e[k - 1] = a;
        break;
      }
  }
  return BracketingFn(std::move(e));
}

/// Least upper bound in T_n, read back from the join of the images in S_n.
/// The pointwise maximum is not used: it can violate (E2).
inline BracketingFn join(const BracketingFn& x, const BracketingFn& y) {
  check_same_n(x, y);
  return phi_inverse(join(phi(x), phi(y)));
}

}  // namespace tamari
