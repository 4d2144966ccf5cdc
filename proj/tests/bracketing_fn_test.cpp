#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tamari/bracketing_fn.hpp"
#include "tamari/embedding.hpp"

using namespace tamari;

namespace {

BracketingFn fn(std::vector<int> v) { return BracketingFn(std::move(v)); }

// Least upper bound among all of T_n under the pointwise order.
std::vector<int> brute_join(const std::vector<std::vector<int>>& all, const std::vector<int>& a,
                            const std::vector<int>& b) {
  std::vector<std::vector<int>> uppers;
  for (const auto& c : all)
    if (oracle::pointwise_leq(a, c) && oracle::pointwise_leq(b, c)) uppers.push_back(c);
  for (const auto& c : uppers)
    if (std::all_of(uppers.begin(), uppers.end(), [&](const auto& d) { return oracle::pointwise_leq(c, d); }))
      return c;
  return {};
}

std::vector<int> brute_meet(const std::vector<std::vector<int>>& all, const std::vector<int>& a,
                            const std::vector<int>& b) {
  std::vector<std::vector<int>> lowers;
  for (const auto& c : all)
    if (oracle::pointwise_leq(c, a) && oracle::pointwise_leq(c, b)) lowers.push_back(c);
  for (const auto& c : lowers)
    if (std::all_of(lowers.begin(), lowers.end(), [&](const auto& d) { return oracle::pointwise_leq(d, c); }))
      return c;
  return {};
}

}  // namespace

TEST(ValidateBracketing, Examples) {
  EXPECT_FALSE(validate_bracketing({3, 2, 3, 4}));
  auto v = validate_bracketing({2, 3, 3});
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (BracketingViolation{BracketingAxiom::E2, 1, 2}));
  for (int n = 1; n <= 9; ++n) EXPECT_FALSE(validate_bracketing(BracketingFn::identity(n).values()));
}

TEST(ValidateBracketing, E1Failure) {
  auto v = validate_bracketing({1, 1});
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (BracketingViolation{BracketingAxiom::E1, 2}));
  EXPECT_THROW(fn({1, 1}), std::invalid_argument);
}

TEST(ValidateBracketing, ValuesOutOfRangeThrow) {
  EXPECT_THROW(validate_bracketing({4, 2, 3}), std::invalid_argument);
  EXPECT_THROW(validate_bracketing({0}), std::invalid_argument);
  EXPECT_THROW(validate_bracketing({}), std::invalid_argument);
}

TEST(Leq, Examples) {
  EXPECT_TRUE(leq(fn({3, 2, 3, 4}), fn({4, 2, 4, 4})));
  EXPECT_TRUE(leq(fn({3, 2, 3, 4}), fn({3, 2, 3, 4})));
  EXPECT_FALSE(leq(fn({2, 2, 3}), fn({1, 3, 3})));
  EXPECT_FALSE(leq(fn({1, 3, 3}), fn({2, 2, 3})));
  EXPECT_THROW(leq(fn({1}), fn({1, 2})), std::invalid_argument);
}

TEST(Meet, Examples) {
  EXPECT_EQ(meet(fn({3, 2, 3, 4}), fn({4, 2, 4, 4})), fn({3, 2, 3, 4}));
  EXPECT_EQ(meet(fn({2, 2, 3}), fn({1, 3, 3})), fn({1, 2, 3}));
  EXPECT_EQ(meet(fn({2, 2, 3}), fn({2, 2, 3})), fn({2, 2, 3}));
  EXPECT_THROW(meet(fn({1}), fn({1, 2})), std::invalid_argument);
}

TEST(Meet, PointwiseMinAlwaysValidUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    const auto all = oracle::bracketings(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        std::vector<int> m(n);
        for (int k = 0; k < n; ++k) m[k] = std::min(a[k], b[k]);
        ASSERT_TRUE(oracle::is_bracketing(m));
      }
  }
}

TEST(Join, Examples) {
  EXPECT_EQ(join(fn({2, 2, 3}), fn({1, 3, 3})), fn({3, 3, 3}));
  EXPECT_FALSE(oracle::is_bracketing({2, 3, 3}));  // the pointwise max
  EXPECT_EQ(join(fn({3, 2, 3, 4}), BracketingFn::identity(4)), fn({3, 2, 3, 4}));
  EXPECT_EQ(join(fn({3, 2, 3, 4}), fn({4, 2, 4, 4})), fn({4, 2, 4, 4}));
  EXPECT_THROW(join(fn({1}), fn({1, 2})), std::invalid_argument);
}

TEST(JoinMeet, AreBoundsUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    const auto all = oracle::bracketings(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        ASSERT_EQ(join(fn(a), fn(b)).values(), brute_join(all, a, b));
        ASSERT_EQ(meet(fn(a), fn(b)).values(), brute_meet(all, a, b));
      }
  }
}

TEST(LatticeLaws, HoldOnAllTriplesOfT4) {
  const auto all = enumerate_tamari(4);
  ASSERT_EQ(all.size(), 14u);
  for (const auto& x : all) {
    ASSERT_EQ(join(x, x), x);
    ASSERT_EQ(meet(x, x), x);
    for (const auto& y : all) {
      ASSERT_EQ(join(x, y), join(y, x));
      ASSERT_EQ(meet(x, y), meet(y, x));
      ASSERT_EQ(join(x, meet(x, y)), x);
      ASSERT_EQ(meet(x, join(x, y)), x);
      for (const auto& z : all) {
        ASSERT_EQ(join(join(x, y), z), join(x, join(y, z)));
        ASSERT_EQ(meet(meet(x, y), z), meet(x, meet(y, z)));
      }
    }
  }
}

TEST(CoverDown, Examples) {
  EXPECT_EQ(cover_down(fn({3, 2, 3, 4})), fn({2, 2, 3, 4}));
  EXPECT_EQ(cover_down(BracketingFn::identity(4)), std::nullopt);
  EXPECT_EQ(cover_down(fn({2, 2, 3})), fn({1, 2, 3}));
}

TEST(CoverDown, TieGoesToSmallestIndex) {
  // E(1)-1 = E(3)-3 = 1: j=1 is lowered.
  EXPECT_EQ(cover_down(fn({2, 2, 4, 4})), fn({1, 2, 4, 4}));
}

TEST(CoverDown, ChainReachesBottomInHeightSteps) {
  for (int n = 1; n <= 7; ++n)
    for_each_bracketing(n, [&](const BracketingFn& e) {
      std::size_t steps = 0;
      std::optional<BracketingFn> cur = e;
      while (auto next = cover_down(*cur)) {
        ASSERT_FALSE(validate_bracketing(next->values()));
        ASSERT_EQ(height(*next) + 1, height(*cur));
        cur = next;
        ++steps;
      }
      ASSERT_TRUE(cur->is_identity());
      ASSERT_EQ(steps, height(e));
    });
}

TEST(Height, Examples) {
  EXPECT_EQ(height(BracketingFn::identity(5)), 0u);
  EXPECT_EQ(height(fn({3, 2, 3, 4})), 2u);
  for (int n = 1; n <= 10; ++n)
    EXPECT_EQ(height(BracketingFn::top(n)), static_cast<std::size_t>(n * (n - 1) / 2));
}

TEST(Height, EqualsLongestChainUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    const auto all = oracle::bracketings(n);
    std::function<bool(const std::vector<int>&, const std::vector<int>&)> le = oracle::pointwise_leq;
    const auto h = oracle::longest_chain(all, le);
    for (std::size_t i = 0; i < all.size(); ++i) ASSERT_EQ(h[i], height(fn(all[i])));
  }
}

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(enumerate_tamari(1), std::vector<BracketingFn>{fn({1})});
  const std::vector<BracketingFn> three{fn({1, 2, 3}), fn({1, 3, 3}), fn({2, 2, 3}), fn({3, 2, 3}),
                                        fn({3, 3, 3})};
  EXPECT_EQ(enumerate_tamari(3), three);
  EXPECT_EQ(enumerate_tamari(4).size(), 14u);
}

TEST(Enumerate, MatchesFilteredSequencesUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    std::vector<std::vector<int>> got;
    for (const auto& e : enumerate_tamari(n)) got.push_back(e.values());
    ASSERT_EQ(got, oracle::bracketings(n)) << "n=" << n;
  }
}

TEST(Enumerate, CountsAreCatalanUpToTen) {
  const auto catalan = oracle::catalan(10);
  for (int n = 1; n <= 10; ++n) {
    std::uint64_t count = 0;
    for_each_bracketing(n, [&](const BracketingFn&) { ++count; });
    ASSERT_EQ(count, catalan[n]) << "n=" << n;
  }
}

TEST(Enumerate, RangeChecked) {
  EXPECT_THROW(enumerate_tamari(0), std::invalid_argument);
  EXPECT_THROW(enumerate_tamari(kMaxEnumerateN + 1), std::invalid_argument);
}
