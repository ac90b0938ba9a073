#include <functional>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "laglab/configurations.hpp"
#include "laglab/poset.hpp"
#include "laglab/verifier.hpp"

using namespace laglab;

namespace {

std::vector<Edge> missing(const RGraph& g) { return complement(g).edges(); }

Edge least_missing(const RGraph& g) { return missing(g).front(); }

/// The left-compressed graphs on [t] with m edges satisfying `pred`, found by
/// enumeration rather than by construction.
std::vector<RGraph> enumerated_matches(int t, int m, const std::function<bool(const RGraph&)>& pred) {
  std::vector<RGraph> out;
  for_each_left_compressed(t, m, [&](RGraph g) {
    if (pred(g)) out.push_back(std::move(g));
    return true;
  });
  return out;
}

std::vector<Edge> sorted(std::vector<Edge> v) {
  std::sort(v.begin(), v.end(), ColexLess{});
  return v;
}

int m_of(int t, int a) { return static_cast<int>(choose(t, 3)) - a; }

}  // namespace

TEST(Configurations, FourMissingAtSix) {
  const RGraph g = build_configuration({Family::four_missing, 6, 0, 4, 0});
  EXPECT_EQ(g.size(), 16u);
  EXPECT_EQ(missing(g), sorted({{4, 5, 6}, {3, 5, 6}, {3, 4, 6}, {3, 4, 5}}));
}

TEST(Configurations, TailGapLeastMissingTriple) {
  const RGraph g = build_configuration({Family::tail_gap, 7, 1, 3, 0});
  EXPECT_EQ(least_missing(g), Edge({4, 5, 7}));
  EXPECT_EQ(g.size(), 32u);
}

TEST(Configurations, SixMissingAtEight) {
  const RGraph g = build_configuration({Family::six_missing, 8, 0, 6, 0});
  EXPECT_EQ(g.size(), 50u);
  EXPECT_EQ(missing(g), sorted({{6, 7, 8}, {5, 7, 8}, {4, 7, 8}, {5, 6, 8}, {4, 6, 8}, {5, 6, 7}}));
  const auto companion = companion_configuration({Family::six_missing, 8, 0, 6, 0});
  ASSERT_TRUE(companion);
  EXPECT_TRUE(companion->contains({4, 6, 8}));
  EXPECT_FALSE(companion->contains({3, 7, 8}));
  EXPECT_TRUE(is_left_compressed(*companion));
}

TEST(Configurations, RejectsOutOfRangeParameters) {
  try {
    build_configuration({Family::tail_gap, 7, 3, 3, 0});
    FAIL();
  } catch (const RefusalError& e) {
    EXPECT_NE(std::string(e.what()).find("a >= 2i+1"), std::string::npos);
  }
  EXPECT_THROW(build_configuration({Family::tail_gap, 7, 1, 6, 0}), RefusalError);
  EXPECT_THROW(build_configuration({Family::tail_gap, 7, 0, 3, 0}), RefusalError);
  EXPECT_THROW(build_configuration({Family::subclique_swap_wide, 8, 0, 7, 0}), RefusalError);
  EXPECT_THROW(build_configuration({Family::subclique_swap, 8, 0, 4, 0}), RefusalError);
  EXPECT_THROW(build_configuration({Family::small_difference_case, 8, 0, 6, 7}), RefusalError);
  EXPECT_THROW(build_configuration({Family::small_difference_case, 8, 0, 4, 2}), RefusalError);
  EXPECT_THROW(build_configuration({Family::four_missing, 5, 0, 4, 0}), RefusalError);
}

TEST(Configurations, ParseFamilyNames) {
  EXPECT_EQ(parse_family("thm1.10")->family, Family::tail_gap);
  EXPECT_EQ(parse_family("case4")->index, 4);
  EXPECT_EQ(parse_family("lemma3.7")->family, Family::six_missing);
  EXPECT_FALSE(parse_family("lemma9"));
  EXPECT_EQ(family_name({Family::small_difference_case, 8, 0, 6, 5}), "case5");
}

TEST(Configurations, EveryMemberIsLeftCompressedWithTheRightSize) {
  for (int t : {7, 8, 9}) {
    for (const ConfigurationSpec& spec : all_configurations(t)) {
      const RGraph g = build_configuration(spec);
      const auto comp = complement_triples(spec);
      EXPECT_TRUE(is_left_compressed(g)) << describe(spec);
      EXPECT_EQ(g.size() + comp.size(), binomial(t, 3)) << describe(spec);
      EXPECT_EQ(missing(g), comp) << describe(spec);
    }
  }
}

TEST(Configurations, MemberCountsPerT) {
  auto count = [](int t, Family f) {
    const auto all = all_configurations(t);
    return std::count_if(all.begin(), all.end(), [f](const ConfigurationSpec& s) { return s.family == f; });
  };
  // tail_gap at t=7: (1,3),(1,4),(1,5),(2,5); at t=8 add (1,6),(2,6).
  EXPECT_EQ(count(7, Family::tail_gap), 4);
  EXPECT_EQ(count(8, Family::tail_gap), 6);
  EXPECT_EQ(count(7, Family::subclique_swap_wide), 0);
  EXPECT_EQ(count(8, Family::subclique_swap_wide), 0);
  EXPECT_EQ(count(9, Family::subclique_swap_wide), 1);
  EXPECT_EQ(count(8, Family::clique_gap), 1);
  EXPECT_EQ(count(8, Family::small_difference_case), 4 + 2 + 3 + 0 + 1 + 1);
}

// The next tests recover each family from its defining description by
// filtering the exhaustive enumeration, then compare with the construction.

TEST(Configurations, TailGapIsTheUniqueGraphWithThatLeastMissingTriple) {
  for (int t : {7, 8})
    for (const ConfigurationSpec& spec : all_configurations(t)) {
      if (spec.family != Family::tail_gap) continue;
      const Edge target{t - 2 - spec.i, t - 2, t};
      const auto found =
          enumerated_matches(t, m_of(t, spec.a), [&](const RGraph& g) { return least_missing(g) == target; });
      ASSERT_EQ(found.size(), 1u) << describe(spec);
      EXPECT_EQ(found[0], build_configuration(spec)) << describe(spec);
    }
}

TEST(Configurations, TailGapNeedsAtLeastTwoIPlusOneMissing) {
  for (int t : {7, 8})
    for (int i = 1; t - 2 - i >= 1; ++i)
      for (int a = 3; a <= t - 2; ++a) {
        const Edge target{t - 2 - i, t - 2, t};
        const auto found =
            enumerated_matches(t, m_of(t, a), [&](const RGraph& g) { return least_missing(g) == target; });
        EXPECT_EQ(!found.empty(), a >= 2 * i + 1) << "t=" << t << " i=" << i << " a=" << a;
      }
}

TEST(Configurations, SwapFamiliesMatchTheirDescriptions) {
  for (int t : {7, 8})
    for (int a = 3; a <= t - 2; ++a) {
      const RGraph colex = colex_on(t, m_of(t, a));
      for (int diff : {4, 6}) {
        const auto found = enumerated_matches(t, m_of(t, a), [&](const RGraph& g) {
          return least_missing(g) == Edge{t - 3, t - 2, t - 1} && symmetric_difference_size(g, colex) == std::size_t(diff);
        });
        const Family f = diff == 4 ? Family::subclique_swap : Family::subclique_swap_wide;
        ConfigurationSpec spec{f, t, 0, a, 0};
        bool valid = true;
        try {
          validate(spec);
        } catch (const RefusalError&) {
          valid = false;
        }
        if (valid) {
          ASSERT_EQ(found.size(), 1u) << describe(spec);
          EXPECT_EQ(found[0], build_configuration(spec));
        } else if (a >= (diff == 4 ? 5 : 7)) {
          EXPECT_TRUE(found.empty());
        }
      }
    }
}

TEST(Configurations, CliqueGapMatchesItsDescription) {
  const int t = 8;
  const RGraph sub = complete_graph(3, t - 1);
  const auto found = enumerated_matches(t, m_of(t, 6), [&](const RGraph& g) {
    return is_subgraph(sub.with_order(t), g) && least_missing(g) == Edge{t - 4, t - 3, t};
  });
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0], build_configuration({Family::clique_gap, t, 0, 6, 0}));
}

TEST(Configurations, CasesMatchTheirMissingTriplesOutsideTheTopPair) {
  for (int t : {7, 8})
    for (const ConfigurationSpec& spec : all_configurations(t)) {
      if (spec.family != Family::small_difference_case) continue;
      const RGraph g = build_configuration(spec);
      std::vector<Edge> outside;
      for (const Edge& e : missing(g))
        if (!(e.contains(t - 1) && e.contains(t))) outside.push_back(e);
      EXPECT_EQ(outside, sorted(detail::case_core(spec.index, t))) << describe(spec);
      EXPECT_LE(symmetric_difference_size(g, colex_on(t, static_cast<int>(g.size()))), 6u) << describe(spec);
    }
}
