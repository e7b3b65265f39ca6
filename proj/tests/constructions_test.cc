#include <gtest/gtest.h>

#include <set>

#include "tiling_disc/constructions.h"
#include "tiling_disc/errors.h"
#include "tiling_disc/solver.h"

namespace tiling_disc {
namespace {

int plus_class_pairs(const ConstructionMeta& meta) {
  int plus = 0;
  for (int i = 0; i < meta.num_classes(); ++i)
    for (int j = i + 1; j < meta.num_classes(); ++j) plus += meta.class_labels[i][j] > 0;
  return plus;
}

std::int64_t direct_sum(const Construction& c, const Tiling& t) {
  std::int64_t s = 0;
  for (const Clique& tile : t)
    for (size_t a = 0; a < tile.vertices().size(); ++a)
      for (size_t b = a + 1; b < tile.vertices().size(); ++b)
        s += c.labeling.raw(tile[a], tile[b]);
  return s;
}

TEST(ConstructionsTest, Mod03Shapes) {
  const Construction a = extremal_mod03(3, 12);
  EXPECT_EQ(a.meta.num_classes(), 4);
  EXPECT_EQ(a.graph, Graph::complete_multipartite(std::vector<int>{3, 3, 3, 3}));
  EXPECT_EQ(plus_class_pairs(a.meta), 3);
  const Construction b = extremal_mod03(4, 20);
  EXPECT_EQ(b.meta.num_classes(), 5);
  EXPECT_EQ(plus_class_pairs(b.meta), 5);
  EXPECT_THROW(extremal_mod03(5, 60), ParameterError);
  EXPECT_THROW(extremal_mod03(3, 16), ParameterError);
}

TEST(ConstructionsTest, Mod1Shapes) {
  const Construction c = extremal_mod1(1, 60);
  EXPECT_EQ(c.meta.r, 5);
  EXPECT_EQ(c.meta.x_size(), 5);
  EXPECT_EQ(c.meta.y_size(), 5);
  EXPECT_THROW(extremal_mod1(1, 61), ParameterError);
  EXPECT_THROW(extremal_mod1(0, 60), ParameterError);
  // Both sign patterns on the first r classes are 2m-regular.
  for (int i = 0; i < 5; ++i) {
    int minus = 0, plus = 0;
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      (c.meta.class_labels[i][j] < 0 ? minus : plus)++;
    }
    EXPECT_EQ(minus, 2);
    EXPECT_EQ(plus, 2);
  }
  // X vertices see +1 everywhere, Y vertices -1.
  for (Vertex v = 50; v < 60; ++v) {
    EXPECT_EQ(c.labeling.label(0, v), c.meta.in_x(v) ? 1 : -1);
  }
}

TEST(ConstructionsTest, Mod2Shapes) {
  const Construction c = extremal_mod2(1, 84);
  EXPECT_EQ(c.meta.r, 6);
  EXPECT_EQ(c.meta.x_size(), 5 * 84 / (2 * 6 * 7));
  EXPECT_EQ(c.meta.y_size(), 84 / 12);
  int plus = 0, minus = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) (c.meta.class_labels[i][j] > 0 ? plus : minus)++;
  EXPECT_EQ(plus, 8);
  EXPECT_EQ(minus, 7);
  EXPECT_EQ(mod2_closed_form(c.meta), 0);
  EXPECT_THROW(extremal_mod2(1, 80), ParameterError);
}

TEST(ConstructionsTest, MatchingShapes) {
  const Construction c = matching_extremal(8);
  int plus = 0, minus = 0;
  for (const Edge& e : c.graph.edges()) (c.labeling.label(e.u, e.v) > 0 ? plus : minus)++;
  EXPECT_EQ(plus, 12);
  EXPECT_EQ(minus, 12);
  const Construction small = matching_extremal(4);
  EXPECT_TRUE(small.graph.is_complete());
  EXPECT_EQ(small.labeling.minus_neighbors(3).size(), 3u);
  EXPECT_EQ(small.labeling.plus_neighbors(0).size(), 2u);
  EXPECT_THROW(matching_extremal(6), ParameterError);
}

TEST(ConstructionsTest, MinDegreeMatchesTuranBound) {
  for (const Construction& c :
       {extremal_mod03(3, 12), extremal_mod03(4, 20), extremal_mod03(7, 56),
        extremal_mod1(1, 60), extremal_mod2(1, 84)}) {
    const int r = c.meta.r;
    EXPECT_EQ(min_degree(c.graph), c.meta.n - c.meta.n / (r + 1)) << meta_line(c.meta);
  }
  // Four classes for r = 2, so the bound is 3n/4.
  EXPECT_EQ(min_degree(matching_extremal(16).graph), 12);
}

TEST(ConstructionsTest, MetaLine) {
  EXPECT_EQ(meta_line(extremal_mod03(3, 12).meta),
            "family=mod03 r=3 n=12 parts=3,3,3,3 X=0 Y=0");
  EXPECT_EQ(meta_line(extremal_mod1(1, 60).meta),
            "family=mod1 r=5 n=60 parts=10,10,10,10,10,10 X=5 Y=5");
  EXPECT_EQ(family_from_string("mod2"), Family::kMod2);
  EXPECT_THROW(family_from_string("mod5"), ParameterError);
}

TEST(CanonicalTilingTest, Mod03AvoidsEachClassOnce) {
  const Construction c = extremal_mod03(3, 12);
  const Tiling t = canonical_tiling(c.meta, c.graph);
  ASSERT_TRUE(is_perfect_tiling(c.graph, t, 3));
  std::multiset<int> avoided;
  for (const Clique& tile : t) {
    std::set<int> classes;
    for (Vertex v : tile) classes.insert(c.meta.class_of(v));
    for (int k = 0; k < 4; ++k)
      if (!classes.count(k)) avoided.insert(k);
  }
  EXPECT_EQ(avoided, (std::multiset<int>{0, 1, 2, 3}));
  EXPECT_EQ(discrepancy(c.labeling, t), 0);
}

TEST(CanonicalTilingTest, Mod1Census) {
  const Construction c = extremal_mod1(1, 60);
  for (std::uint64_t seed : {0, 1, 2, 3}) {
    const Tiling t = canonical_tiling(c.meta, c.graph, seed);
    ASSERT_TRUE(is_perfect_tiling(c.graph, t, 5));
    EXPECT_EQ(t.size(), 12);
    EXPECT_EQ(type_census(c.meta, t), (TypeCensus{2, 5, 5}));
    EXPECT_EQ(discrepancy(c.labeling, t), 0);
  }
}

TEST(CanonicalTilingTest, EveryFamilyIsPerfectAndBalanced) {
  for (const Construction& c :
       {extremal_mod03(3, 24), extremal_mod03(4, 40), extremal_mod03(8, 72),
        extremal_mod1(1, 120), extremal_mod1(2, 180), extremal_mod2(1, 168),
        extremal_mod2(2, 220), matching_extremal(12)}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Tiling t = canonical_tiling(c.meta, c.graph, seed);
      ASSERT_TRUE(is_perfect_tiling(c.graph, t, c.meta.r)) << meta_line(c.meta);
      EXPECT_EQ(discrepancy(c.labeling, t), 0) << meta_line(c.meta);
      EXPECT_EQ(census_discrepancy(c.meta, t), 0) << meta_line(c.meta);
    }
  }
}

TEST(CensusTest, SampledTilingsAgreeWithDirectSum) {
  for (const Construction& c : {extremal_mod1(1, 60), extremal_mod2(1, 84)}) {
    const int r = c.meta.r;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto t = sample_tiling(c.graph, r, seed);
      ASSERT_TRUE(t.has_value());
      const TypeCensus census = type_census(c.meta, *t);
      EXPECT_EQ(census.t1, c.meta.n / (r * (r + 1)));
      EXPECT_EQ(census.t2 + census.t3, c.meta.n / (r + 1));
      EXPECT_EQ(census.t2, c.meta.x_size());
      EXPECT_EQ(census_discrepancy(c.meta, *t), direct_sum(c, *t));
      EXPECT_EQ(direct_sum(c, *t), 0);
    }
  }
}

// In the mod-2 family each pair of pattern classes is used by exactly
// (r-2)/r * n/(r+1) of the tiles that meet the special class.
TEST(CensusTest, Mod2PairUsageIsUniform) {
  const Construction c = extremal_mod2(1, 84);
  const int r = 6;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = sample_tiling(c.graph, r, seed);
    ASSERT_TRUE(t.has_value());
    std::vector<std::vector<int>> used(r, std::vector<int>(r, 0));
    for (const Clique& tile : *t) {
      std::set<int> classes;
      for (Vertex v : tile) classes.insert(c.meta.class_of(v));
      if (!classes.count(r)) continue;
      for (int i : classes)
        for (int j : classes)
          if (i < j && j < r) ++used[i][j];
    }
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) EXPECT_EQ(used[i][j], (r - 2) * 84 / (r * (r + 1)));
  }
}

TEST(CensusTest, MatchingSpecialClassCount) {
  const Construction c = matching_extremal(8);
  enumerate_perfect_tilings(c.graph, 2, [&](const TilingView& view) {
    const TypeCensus census = type_census(c.meta, view.to_tiling());
    EXPECT_EQ(census.t2 + census.t3, 2);
  });
}

TEST(CensusTest, RejectsTileWithinOneClass) {
  const Construction c = extremal_mod03(3, 12);
  const Tiling bad({Clique{0, 1, 3}, Clique{2, 4, 5}, Clique{6, 7, 8}, Clique{9, 10, 11}});
  EXPECT_THROW(type_census(c.meta, bad), StructureError);
}

TEST(ConstructionsTest, ExhaustiveZeroDiscrepancySmall) {
  for (const Construction& c : {extremal_mod03(3, 12), matching_extremal(8),
                                matching_extremal(12)}) {
    const auto ex = discrepancy_extremes(c.graph, c.labeling, c.meta.r,
                                         SearchMode::kExhaustive);
    EXPECT_EQ(ex.min_disc, 0);
    EXPECT_EQ(ex.max_disc, 0);
  }
}

}  // namespace
}  // namespace tiling_disc
