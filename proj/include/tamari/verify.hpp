#pragma once

// Exhaustive and sampled verification of the embedding of T_n into S_n and
// of the supporting lattice properties. Each verification yields a Report
// that serialises to JSON:
//   {"kind":..., "n":N, "elements":..., "pairs_checked":...,
//    "checks":{"injective":true,...}, "witness":null|{...}, "millis":...}
// A check is listed once it has run; the first failing check stops the run
// and leaves its witness.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tamari/brackets.hpp"
#include "tamari/bracketing_fn.hpp"
#include "tamari/embedding.hpp"
#include "tamari/families.hpp"
#include "tamari/inversion_set.hpp"
#include "tamari/lattice.hpp"
#include "tamari/parallel.hpp"
#include "tamari/serialization.hpp"

namespace tamari {

struct VerifyOptions {
  /// Number of random pairs; unset means exhaustive for small n and
  /// kDefaultSamples otherwise. Zero forces an exhaustive run.
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned workers = 0;
};

inline constexpr std::uint64_t kDefaultSamples = 100'000;
inline constexpr int kExhaustivePairsUpTo = 5;

struct Report {
  std::string kind;
  int n = 0;
  std::size_t elements = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<std::string, bool>> checks{};
  std::optional<json> witness{};
  double millis = 0;

  bool passed() const {
    if (witness) return false;
    for (const auto& [name, ok] : checks)
      if (!ok) return false;
    return true;
  }

  std::optional<bool> check(const std::string& name) const {
    for (const auto& [key, ok] : checks)
      if (key == name) return ok;
    return std::nullopt;
  }

  json to_json() const {
    json c = json::object();
    for (const auto& [name, ok] : checks) c[name] = ok;
    return {{"kind", kind},       {"n", n},
            {"elements", elements}, {"pairs_checked", pairs_checked},
            {"checks", c},        {"witness", witness ? *witness : json(nullptr)},
            {"millis", millis}};
  }
};

namespace detail {

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

using PairList = std::vector<std::pair<std::size_t, std::size_t>>;

// All ordered pairs when exhaustive, else seeded uniform random pairs.
inline PairList choose_pairs(std::size_t m, int n, const VerifyOptions& opt) {
  std::uint64_t samples = opt.samples.value_or(n <= kExhaustivePairsUpTo ? 0 : kDefaultSamples);
  PairList pairs;
  if (samples == 0) {
    pairs.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) pairs.emplace_back(i, j);
    return pairs;
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  pairs.reserve(samples);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::size_t i = pick(rng);
    pairs.emplace_back(i, pick(rng));
  }
  return pairs;
}

inline void check_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(lo) + " <= n <= " +
                                std::to_string(hi) + ", got " + std::to_string(n));
}

// Runs a per-pair check; records it and returns false on the first failure.
template <class Check>
bool sweep(Report& report, const std::string& name, const PairList& pairs, unsigned workers, Check check) {
  auto failure = first_failure<json>(pairs.size(), [&](std::size_t i) { return check(pairs[i]); }, workers);
  report.checks.emplace_back(name, !failure);
  if (failure) {
    report.witness = failure->second;
    report.witness->emplace("check", name);
  }
  return !failure;
}

}  // namespace detail

/// Checks over T_n: phi is injective; E <= F iff phi(E) ⊆ phi(F); phi turns
/// joins and meets of T_n into joins and meets of S_n, the latter being plain
/// intersection; and the image is exactly the inversion sets with the
/// strengthened property (I2)*.
inline Report verify_embedding(int n, const VerifyOptions& opt = {}) {
  detail::check_range(n, 1, 7, "verify_embedding");
  detail::Stopwatch clock;
  Report report{.kind = "embedding", .n = n};
  const std::vector<BracketingFn> elements = enumerate_tamari(n);
  std::vector<InversionSet> images;
  images.reserve(elements.size());
  for (const auto& e : elements) images.push_back(phi(e));
  report.elements = elements.size();

  auto finish = [&] {
    report.millis = clock.millis();
    return report;
  };

  // Injectivity.
  {
    std::map<InversionSet, std::size_t> seen;
    std::optional<json> witness{};
    for (std::size_t i = 0; i < images.size() && !witness; ++i) {
      auto [it, fresh] = seen.emplace(images[i], i);
      if (!fresh)
        witness = json{{"E", to_json(elements[it->second])}, {"F", to_json(elements[i])},
                       {"image", to_json(images[i])}};
    }
    report.checks.emplace_back("injective", !witness);
    if (witness) {
      report.witness = std::move(*witness);
      report.witness->emplace("check", "injective");
      return finish();
    }
  }

  // Image equals the (I2)* members of S_n.
  {
    std::set<InversionSet> image(images.begin(), images.end());
    std::set<InversionSet> starred;
    for (const Permutation& p : all_permutations(n)) {
      InversionSet s = inversions(p);
      if (satisfies_i2star(s)) starred.insert(std::move(s));
    }
    std::optional<json> witness{};
    for (const auto& s : starred)
      if (!image.contains(s)) {
        witness = json{{"reason", "(I2)* element outside the image"}, {"set", to_json(s)}};
        break;
      }
    if (!witness)
      for (const auto& s : image)
        if (!starred.contains(s)) {
          witness = json{{"reason", "image element failing (I2)*"}, {"set", to_json(s)}};
          break;
        }
    report.checks.emplace_back("image", !witness);
    if (witness) {
      report.witness = std::move(*witness);
      report.witness->emplace("check", "image");
      return finish();
    }
  }

  const auto pairs = detail::choose_pairs(elements.size(), n, opt);
  report.pairs_checked = pairs.size();
  auto pair_witness = [&](std::size_t i, std::size_t j) {
    return json{{"E", to_json(elements[i])}, {"F", to_json(elements[j])}};
  };

  const bool ok =
      detail::sweep(report, "order", pairs, opt.workers,
                    [&](std::pair<std::size_t, std::size_t> p) -> std::optional<json> {
                      const auto [i, j] = p;
                      if (leq(elements[i], elements[j]) == leq(images[i], images[j])) return std::nullopt;
                      return pair_witness(i, j);
                    }) &&
      detail::sweep(report, "join", pairs, opt.workers,
                    [&](std::pair<std::size_t, std::size_t> p) -> std::optional<json> {
                      const auto [i, j] = p;
                      const InversionSet expected = join(images[i], images[j]);
                      try {
                        if (phi(join(elements[i], elements[j])) == expected) return std::nullopt;
                      } catch (const std::invalid_argument&) {
                      }
                      json w = pair_witness(i, j);
                      w["join_S"] = to_json(expected);
                      return w;
                    }) &&
      detail::sweep(report, "meet", pairs, opt.workers,
                    [&](std::pair<std::size_t, std::size_t> p) -> std::optional<json> {
                      const auto [i, j] = p;
                      const InversionSet via_tamari = phi(meet(elements[i], elements[j]));
                      const InversionSet via_perm = meet(images[i], images[j]);
                      const InversionSet intersection = images[i].set_intersection(images[j]);
                      if (via_tamari == via_perm && via_perm == intersection) return std::nullopt;
                      json w = pair_witness(i, j);
                      w["phi_meet_T"] = to_json(via_tamari);
                      w["meet_S"] = to_json(via_perm);
                      w["intersection"] = to_json(intersection);
                      return w;
                    });
  (void)ok;
  return finish();
}

/// Checks over T_n: the cover_down chain from E strips one pair of phi(E) at
/// a time and has length |phi(E)|; the longest chain from the bottom of T_n
/// to E has the same length; atoms go to atoms; bottom and top are preserved.
inline Report verify_height(int n, const VerifyOptions& opt = {}) {
  detail::check_range(n, 1, 5, "verify_height");
  detail::Stopwatch clock;
  Report report{.kind = "height", .n = n};
  // The order alone drives the oracle lattice; joins and meets are derived.
  const auto tn = tamari_lattice(n, /*derive_ops=*/true);
  const auto& elements = tn.elements;
  report.elements = elements.size();
  auto finish = [&] {
    report.millis = clock.millis();
    return report;
  };
  auto fail = [&](const std::string& name, json witness) {
    report.checks.emplace_back(name, false);
    witness.emplace("check", name);
    report.witness = std::move(witness);
    return finish();
  };

  auto chain_failure = first_failure<json>(
      elements.size(),
      [&](std::size_t i) -> std::optional<json> {
        BracketingFn current = elements[i];
        InversionSet image = phi(current);
        const std::size_t expected = rank(image);
        std::size_t steps = 0;
        while (auto lower = cover_down(current)) {
          const InversionSet lower_image = phi(*lower);
          if (!lower_image.is_subset_of(image) || rank(lower_image) + 1 != rank(image))
            return json{{"E", to_json(elements[i])}, {"step_from", to_json(current)},
                        {"step_to", to_json(*lower)}};
          current = *lower;
          image = lower_image;
          ++steps;
        }
        if (steps == expected && height(elements[i]) == expected) return std::nullopt;
        return json{{"E", to_json(elements[i])}, {"chain_length", steps}, {"rank", expected}};
      },
      opt.workers);
  if (chain_failure) return fail("cover_chain", chain_failure->second);
  report.checks.emplace_back("cover_chain", true);

  const auto longest = tn.lattice.heights();
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (longest[i] != rank(phi(elements[i])))
      return fail("longest_chain", {{"E", to_json(elements[i])},
                                    {"longest_chain", longest[i]},
                                    {"rank", rank(phi(elements[i]))}});
  report.checks.emplace_back("longest_chain", true);

  for (Index a : tn.lattice.atoms())
    if (rank(phi(elements[a])) != 1) return fail("atoms", {{"E", to_json(elements[a])}});
  // Every atom of S_n in the image comes from an atom of T_n.
  std::size_t image_atoms = 0;
  for (const auto& e : elements) image_atoms += rank(phi(e)) == 1;
  if (image_atoms != tn.lattice.atoms().size())
    return fail("atoms", {{"atoms_T", tn.lattice.atoms().size()}, {"rank_one_images", image_atoms}});
  report.checks.emplace_back("atoms", true);

  const BracketingFn& bottom = elements[tn.lattice.bottom()];
  const BracketingFn& top = elements[tn.lattice.top()];
  if (!phi(bottom).empty() || phi(top) != InversionSet::full(n))
    return fail("bounds", {{"bottom", to_json(bottom)}, {"top", to_json(top)}});
  report.checks.emplace_back("bounds", true);
  return finish();
}

/// SD∨ and SD∧ on S_n and T_n.
inline Report verify_semidistributive(int n, const VerifyOptions& opt = {}) {
  detail::check_range(n, 1, 5, "verify_semidistributive");
  (void)opt;
  detail::Stopwatch clock;
  Report report{.kind = "semidistributive", .n = n};
  const auto sn = permutation_lattice(n);
  const auto tn = tamari_lattice(n);
  report.elements = sn.elements.size() + tn.elements.size();
  auto record = [&](const std::string& name, const std::optional<Triple>& failure, auto label) {
    report.checks.emplace_back(name, !failure);
    if (failure && !report.witness)
      report.witness = json{{"check", name},
                            {"x", label(failure->x)},
                            {"y", label(failure->y)},
                            {"z", label(failure->z)}};
  };
  const auto s_verdict = check_semidistributive(sn.lattice);
  const auto t_verdict = check_semidistributive(tn.lattice);
  auto s_label = [&](Index i) { return to_json(sn.elements[i]); };
  auto t_label = [&](Index i) { return to_json(tn.elements[i]); };
  record("perm_sd_join", s_verdict.join_failure, s_label);
  record("perm_sd_meet", s_verdict.meet_failure, s_label);
  record("tamari_sd_join", t_verdict.join_failure, t_label);
  record("tamari_sd_meet", t_verdict.meet_failure, t_label);
  report.millis = clock.millis();
  return report;
}

/// Lower and upper boundedness of S_n and T_n.
inline Report verify_bounded(int n, const VerifyOptions& opt = {}) {
  detail::check_range(n, 1, 5, "verify_bounded");
  (void)opt;
  detail::Stopwatch clock;
  Report report{.kind = "bounded", .n = n};
  const auto sn = permutation_lattice(n);
  const auto tn = tamari_lattice(n);
  report.elements = sn.elements.size() + tn.elements.size();
  auto record = [&](const std::string& name, bool ok, const std::vector<Index>& cycle, auto label) {
    report.checks.emplace_back(name, ok);
    if (!ok && !report.witness) {
      json c = json::array();
      for (Index i : cycle) c.push_back(label(i));
      report.witness = json{{"check", name}, {"cycle", c}};
    }
  };
  const auto s_verdict = check_bounded(sn.lattice);
  const auto t_verdict = check_bounded(tn.lattice);
  auto s_label = [&](Index i) { return to_json(sn.elements[i]); };
  auto t_label = [&](Index i) { return to_json(tn.elements[i]); };
  record("perm_lower_bounded", s_verdict.lower_bounded, s_verdict.lower_cycle, s_label);
  record("perm_upper_bounded", s_verdict.upper_bounded, s_verdict.upper_cycle, s_label);
  record("tamari_lower_bounded", t_verdict.lower_bounded, t_verdict.lower_cycle, t_label);
  record("tamari_upper_bounded", t_verdict.upper_bounded, t_verdict.upper_cycle, t_label);
  report.millis = clock.millis();
  return report;
}

/// A random full binary tree on leaves 0..n, built by uniform random splits.
inline BinaryTree random_tree(int n, std::mt19937_64& rng) {
  auto rec = [&](auto&& self, int lo, int hi) -> BinaryTree {
    if (lo == hi) return BinaryTree::leaf(lo);
    std::uniform_int_distribution<int> split(lo + 1, hi);
    const int m = split(rng);
    BinaryTree left = self(self, lo, m - 1);
    return BinaryTree::node(left, self(self, m, hi));
  };
  return rec(rec, 0, n);
}

/// word -> tree -> fn -> tree -> word is the identity, the function passes
/// validation, and the tree has n+1 leaves. Exhaustive over T_n unless
/// `samples` asks for random trees (any n >= 1).
inline Report verify_roundtrip(int n, const VerifyOptions& opt = {}) {
  detail::Stopwatch clock;
  Report report{.kind = "roundtrip", .n = n};
  auto check_one = [&](const BracketingFn& e) -> std::optional<json> {
    const std::string word = to_word(from_bracketing_fn(e));
    const BinaryTree tree = parse_word(word);
    const BracketingFn back = to_bracketing_fn(tree);
    const BinaryTree rebuilt = from_bracketing_fn(back);
    if (back == e && rebuilt == tree && to_word(rebuilt) == word &&
        rebuilt.leaf_count() == static_cast<std::size_t>(e.n()) + 1)
      return std::nullopt;
    return json{{"E", to_json(e)}, {"word", word}, {"back", to_json(back)}};
  };

  std::optional<json> witness{};
  if (opt.samples.value_or(0) > 0) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("verify_roundtrip needs 1 <= n <= 64");
    std::mt19937_64 rng(opt.seed);
    for (std::uint64_t s = 0; s < *opt.samples && !witness; ++s) {
      const BracketingFn e = to_bracketing_fn(random_tree(n, rng));
      witness = check_one(e);
      ++report.elements;
    }
  } else {
    detail::check_range(n, 1, kMaxEnumerateN, "exhaustive verify_roundtrip");
    for_each_bracketing(n, [&](const BracketingFn& e) {
      ++report.elements;
      if (!witness) witness = check_one(e);
    });
  }
  report.checks.emplace_back("roundtrip", !witness);
  if (witness) {
    witness->emplace("check", "roundtrip");
    report.witness = std::move(witness);
  }
  report.millis = clock.millis();
  return report;
}

}  // namespace tamari
