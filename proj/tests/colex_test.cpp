#include <algorithm>
#include <compare>
#include <vector>

#include <gtest/gtest.h>

#include "laglab/colex.hpp"
#include "laglab/error.hpp"
#include "oracles.hpp"

using namespace laglab;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(6, 3), 20u);
  EXPECT_EQ(binomial(8, 3), 56u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(-1, 2), 0u);
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(binomial(62, 31), 465428353255261088u);
  EXPECT_THROW(binomial(200, 100), RefusalError);
}

TEST(Edge, RejectsNonIncreasingOrNonPositive) {
  EXPECT_THROW(Edge({2, 1, 3}), Error);
  EXPECT_THROW(Edge({1, 1, 3}), Error);
  EXPECT_THROW(Edge({0, 1, 3}), Error);
  EXPECT_NO_THROW(Edge({1, 5, 9}));
}

TEST(ColexCompare, OrderingExamples) {
  EXPECT_EQ(colex_compare({2, 4, 6}, {1, 5, 6}), std::strong_ordering::less);
  EXPECT_EQ(colex_compare({1, 2, 3}, {1, 2, 3}), std::strong_ordering::equal);
  EXPECT_EQ(colex_compare({3, 4, 5}, {1, 2, 6}), std::strong_ordering::less);
  EXPECT_EQ(colex_compare({1, 2, 6}, {3, 4, 5}), std::strong_ordering::greater);
}

TEST(ColexCompare, LengthMismatchIsUniformityError) {
  EXPECT_THROW(colex_compare({1, 2}, {1, 2, 3}), UniformityError);
}

TEST(ColexCompare, ListedPrefixIsIncreasing) {
  const std::vector<Edge> listed{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 5},
                                 {1, 4, 5}, {2, 4, 5}, {3, 4, 5}, {1, 2, 6}, {1, 3, 6}, {2, 3, 6}, {1, 4, 6},
                                 {2, 4, 6}, {3, 4, 6}, {1, 5, 6}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}, {1, 2, 7}};
  for (std::size_t k = 0; k < listed.size(); ++k) {
    EXPECT_EQ(colex_rank(listed[k]), k);
    if (k > 0) {
      EXPECT_EQ(colex_compare(listed[k - 1], listed[k]), std::strong_ordering::less);
    }
  }
}

TEST(ColexRank, Examples) {
  EXPECT_EQ(colex_rank({1, 2, 3}), 0u);
  EXPECT_EQ(colex_rank({4, 5, 6}), 19u);
  EXPECT_EQ(colex_rank({1, 2, 7}), 20u);
  EXPECT_EQ(colex_unrank(3, 0), Edge({1, 2, 3}));
  EXPECT_EQ(colex_unrank(3, 19), Edge({4, 5, 6}));
  EXPECT_EQ(colex_unrank(3, 7), Edge({1, 4, 5}));
}

TEST(ColexRank, SortEquivalentOnFirstTenThousandTriples) {
  // Triples on [40] number 9880; on [41] they exceed 10,000.
  auto all = oracle::all_subsets(3, 41);
  all.resize(10'000);
  std::vector<Edge> by_compare = all;
  std::sort(by_compare.begin(), by_compare.end(), ColexLess{});
  std::vector<Edge> by_rank = all;
  std::sort(by_rank.begin(), by_rank.end(),
            [](const Edge& a, const Edge& b) { return colex_rank(a) < colex_rank(b); });
  EXPECT_EQ(by_compare, by_rank);
  for (std::size_t k = 0; k < 10'000; ++k) {
    const Edge e = colex_unrank(3, k);
    ASSERT_EQ(colex_rank(e), k);
  }
}

TEST(ColexRank, RoundTripOtherUniformities) {
  for (int r : {1, 2, 4, 5}) {
    for (std::uint64_t k = 0; k < 2000; ++k) {
      const Edge e = colex_unrank(r, k);
      ASSERT_EQ(e.size(), static_cast<std::size_t>(r));
      ASSERT_EQ(colex_rank(e), k);
      if (k > 0) {
        ASSERT_EQ(colex_compare(colex_unrank(r, k - 1), e), std::strong_ordering::less);
      }
    }
  }
}
