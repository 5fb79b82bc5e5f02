#include <gtest/gtest.h>

#include "wngt/rootsys.hpp"

using namespace wngt;

TEST(RootSys, PositiveRootCounts) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(positive_roots(make_system(Family::A, n)).size(), size_t(n * (n + 1) / 2));
    EXPECT_EQ(positive_roots(make_system(Family::B, n)).size(), size_t(n * n));
    EXPECT_EQ(positive_roots(make_system(Family::C, n)).size(), size_t(n * n));
    if (n >= 4) EXPECT_EQ(positive_roots(make_system(Family::D, n)).size(), size_t(n * (n - 1)));
  }
}

TEST(RootSys, RankLimits) {
  EXPECT_THROW(make_system(Family::D, 2), InvalidSystem);
  EXPECT_THROW(make_system(Family::A, 0), InvalidSystem);
  EXPECT_THROW(make_system(Family::B, 10), InvalidSystem);
}

TEST(RootSys, SimpleRootsAndTheta) {
  for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
    System s = make_system(f, 4);
    auto sr = simple_roots(s);
    ASSERT_EQ(sr.size(), 4u);
    for (auto& a : sr) {
      EXPECT_TRUE(is_root(s, a));
      EXPECT_TRUE(is_positive_vec(a));
    }
    Vec th = theta_short(s);
    EXPECT_TRUE(is_root(s, th));
    // theta is dominant
    for (auto& a : sr) EXPECT_GE(pair_coroot(s, th, a), 0) << s.name();
  }
}

TEST(RootSys, ReflectionsPermuteRoots) {
  for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
    System s = make_system(f, 4);
    for (auto& m : all_roots(s))
      for (auto& r : all_roots(s)) EXPECT_TRUE(is_root(s, reflect(s, m, r)));
  }
}

TEST(RootSys, FundamentalWeightsAreDual) {
  for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
    System s = make_system(f, 4);
    auto sr = simple_roots(s);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        EXPECT_EQ(pair_coroot(s, fundamental_weight2(s, i), sr[j - 1]), i == j ? 2 : 0)
            << s.name() << " " << i << " " << j;
  }
}

TEST(RootSys, Lattices) {
  System b = make_system(Family::B, 3);
  EXPECT_TRUE(in_weight_lattice2(b, fundamental_weight2(b, 3)));
  EXPECT_FALSE(in_root_lattice2(b, fundamental_weight2(b, 3)));
  EXPECT_TRUE(in_root_lattice2(b, fundamental_weight2(b, 1)));
}
