#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

#include "wngt/words.hpp"

using namespace wngt;

TEST(Words, CoxeterMatrix) {
  System b = make_system(Family::B, 3);
  EXPECT_EQ(coxeter_m(b, 0, 1), 4);  // alpha_0 = [-e1, 1] is short
  EXPECT_EQ(coxeter_m(b, 2, 3), 4);
  EXPECT_EQ(coxeter_m(b, 1, 2), 3);
  EXPECT_EQ(coxeter_m(b, 1, 3), 2);
  System a = make_system(Family::A, 1);
  EXPECT_EQ(coxeter_m(a, 0, 1), 0);
  System d = make_system(Family::D, 4);
  EXPECT_EQ(coxeter_m(d, 0, 2), 3);
  EXPECT_EQ(coxeter_m(d, 0, 1), 2);
}

TEST(Words, ReducedWordsOfLongestElement) {
  // 16 for A3 and 42 for B3
  System a = make_system(Family::A, 3);
  EXPECT_EQ(all_reduced_words(a, from_perm(a, longest_element(a))).size(), 16u);
  System b = make_system(Family::B, 3);
  EXPECT_EQ(all_reduced_words(b, from_perm(b, longest_element(b))).size(), 42u);
}

TEST(Words, NeighborsAreReducedWordsOfTheSameElement) {
  System s = make_system(Family::C, 3);
  Element e = from_word(s, {0, 1, 0, 1, 2, 3, 2, 1, 0});
  std::vector<int> w = reduced_word(s, e);
  auto nb = coxeter_neighbors(s, w);
  EXPECT_FALSE(nb.empty());
  for (auto& n : nb) {
    EXPECT_EQ(from_word(s, n.word), e);
    EXPECT_NE(n.word, w);
  }
  EXPECT_THROW(coxeter_neighbors(s, {1, 1}), NonReduced);
}

TEST(Words, CapIsEnforced) {
  System s = make_system(Family::B, 3);
  EXPECT_THROW(all_reduced_words(s, from_perm(s, longest_element(s)), 5), CapExceeded);
}

TEST(Words, TriplesSatisfyLengthRule) {
  System s = make_system(Family::B, 3);
  std::vector<int> w{1, 2, 3, 2, 1, 0};
  auto seq = lambda_sequence(s, w);
  for (auto& t : triples_in(s, w)) {
    EXPECT_TRUE(is_triple(s, t));
    EXPECT_EQ(t.gamma, t.alpha + t.beta);
    auto pos = [&](const AffineRoot& r) { return std::find(seq.begin(), seq.end(), r) - seq.begin(); };
    EXPECT_LT(pos(t.alpha), pos(t.gamma));
    EXPECT_LT(pos(t.gamma), pos(t.beta));
  }
}

TEST(Words, LengthRule) {
  System b = make_system(Family::B, 3);
  // long + long = long
  EXPECT_TRUE(length_rule(b, {{{0, 1, 1}, 0}, {{1, 1, 0}, 0}, {{1, 0, -1}, 0}}));
  // short + short = long is excluded
  EXPECT_FALSE(length_rule(b, {{{0, 1, 0}, 0}, {{1, 1, 0}, 0}, {{1, 0, 0}, 0}}));
}

TEST(Words, GatherableInRankTwo) {
  // no NGT in rank 2: every triple of every short word gathers
  System s = make_system(Family::C, 2);
  std::vector<int> w = reduced_word(s, from_word(s, {0, 1, 2, 1, 0, 1, 2}));
  ASSERT_GE(w.size(), 4u);
  for (auto& t : triples_in(s, w)) EXPECT_EQ(is_gatherable(s, w, t).outcome, GatherOutcome::Gatherable);
}

TEST(Words, GatherWitnessReplays) {
  System s = make_system(Family::B, 3);
  std::vector<int> w{2, 1, 0, 1, 2, 3};
  for (auto& t : triples_in(s, w)) {
    auto g = is_gatherable(s, w, t);
    if (g.outcome != GatherOutcome::Gatherable) continue;
    auto seq = lambda_sequence(s, g.witness_word);
    auto pos = [&](const AffineRoot& r) { return int(std::find(seq.begin(), seq.end(), r) - seq.begin()); };
    int a = pos(t.alpha), c = pos(t.gamma), b = pos(t.beta);
    EXPECT_EQ(std::abs(a - c), 1);
    EXPECT_EQ(std::abs(b - c), 1);
    EXPECT_EQ(from_word(s, g.witness_word), from_word(s, w));
  }
}

TEST(Words, MissingTripleThrows) {
  System s = make_system(Family::B, 3);
  Triple t{{{1, 0, 1}, 0}, {{1, 1, 0}, 0}, {{0, 1, -1}, 0}};
  EXPECT_THROW(is_gatherable(s, {0, 1, 2}, t), TripleAbsent);
}

TEST(Words, NonGatherableLength19InD4) {
  System s = make_system(Family::D, 4);
  std::vector<int> w{2, 1, 3, 2, 4, 2, 0, 1, 2, 3, 2, 0, 1, 2, 4, 2, 1, 3, 2};
  auto t = is_minimal_ngt(s, from_word(s, w));
  ASSERT_TRUE(t);
  EXPECT_EQ(is_gatherable(s, w, *t).outcome, GatherOutcome::NonGatherable);
  EXPECT_FALSE(admissible(s, w, *t));
}
