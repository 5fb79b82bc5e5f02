#include <gtest/gtest.h>

#include "wngt/ball.hpp"
#include "wngt/ngt.hpp"

using namespace wngt;

TEST(Ngt, AlmostDominant) {
  System s = make_system(Family::D, 4);
  Vec b2{-2, -2, 0, 0};  // -omega_2
  EXPECT_TRUE(almost_dominant(s, b2, 2));
  EXPECT_FALSE(almost_dominant(s, b2, 1));
  auto ks = almost_dominant_indices(s, b2);
  EXPECT_EQ(ks, std::vector<int>{2});
}

TEST(Ngt, VarsigmaIsInvolution) {
  for (auto f : {Family::A, Family::B, Family::D}) {
    System s = make_system(f, 4);
    for (int j = 1; j <= 4; ++j) EXPECT_EQ(varsigma_index(s, varsigma_index(s, j)), j);
  }
  System a = make_system(Family::A, 4);
  EXPECT_EQ(varsigma_index(a, 1), 4);
}

TEST(Ngt, GammaB) {
  System s = make_system(Family::D, 4);
  auto g = gamma_b(s, {-2, -2, 0, 0}, 2);
  EXPECT_EQ(g.removed, std::vector<int>{2});
  EXPECT_FALSE(g.dot_removed);
}

TEST(Ngt, NotAlmostDominantThrows) {
  System s = make_system(Family::B, 3);
  EXPECT_THROW(analyze_varpi(s, {0, 2, 0}, 3, perm_identity(3)), NotAlmostDominant);
}

TEST(Ngt, NoMinimalNgtInSmallRanks) {
  for (auto [f, n] : {std::pair{Family::A, 3}, {Family::B, 2}, {Family::C, 2}}) {
    System s = make_system(f, n);
    Ball b = ball_parallel(s, 8);
    for (auto& e : b.elems) EXPECT_FALSE(is_minimal_ngt(s, e)) << element_str(e);
  }
}

TEST(Ngt, MinimalNgtHasUniqueSimpleRoots) {
  System s = make_system(Family::D, 4);
  Element e{{-2, -2, 0, 0}, {{-2, -1, 3, 4}}};
  ASSERT_TRUE(is_minimal_ngt(s, e));
  EXPECT_EQ(length(s, e), 19);
  EXPECT_EQ(simple_in_lambda(s, e).size(), 1u);
  EXPECT_EQ(simple_in_lambda(s, inverse(s, e)).size(), 1u);
  auto ep = nonmovable_endpoints(s, e);
  EXPECT_TRUE(ep.first && ep.last);
}

TEST(Ngt, PiBFamilyHasAlphaZeroFirst) {
  for (auto [f, n] : {std::pair{Family::B, 3}, {Family::C, 3}, {Family::D, 4}}) {
    System s = make_system(f, n);
    for (int i = 1; i <= n; ++i)
      for (int m = -2; m <= 2; ++m) {
        Element p = vthpib_family(s, i, m, std::vector<int>(n, 0));
        if (length(s, p) == 0) continue;
        EXPECT_EQ(simple_in_lambda(s, p), std::vector<int>{0});
        EXPECT_FALSE(is_minimal_ngt(s, p));
      }
  }
}

TEST(Ngt, WeightBoxSize) {
  EXPECT_EQ(weight_box(make_system(Family::C, 3), 1).size(), 27u);
  // B: integral or all half-integral coordinates
  EXPECT_EQ(weight_box(make_system(Family::B, 2), 1).size(), 9u + 4u);
}
