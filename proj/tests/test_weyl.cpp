#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "wngt/ngt.hpp"
#include "wngt/weyl.hpp"

using namespace wngt;

namespace {
std::vector<Family> families() { return {Family::A, Family::B, Family::C, Family::D}; }
}  // namespace

TEST(Weyl, FiniteGroupOrders) {
  std::map<Family, size_t> order{{Family::A, 120}, {Family::B, 384}, {Family::C, 384}, {Family::D, 192}};
  for (auto f : families()) EXPECT_EQ(finite_weyl(make_system(f, 4)).size(), order[f]);
}

TEST(Weyl, LongestElementLength) {
  for (auto f : families()) {
    System s = make_system(f, 4);
    EXPECT_EQ(perm_length(s, longest_element(s)), int(positive_roots(s).size()));
  }
}

TEST(Weyl, GroupAxioms) {
  System s = make_system(Family::C, 3);
  Element x = from_word(s, {0, 1, 2, 0});
  Element y = from_word(s, {3, 2, 0});
  Element z = from_word(s, {1, 3});
  EXPECT_EQ(multiply(s, multiply(s, x, y), z), multiply(s, x, multiply(s, y, z)));
  EXPECT_EQ(multiply(s, x, inverse(s, x)), identity(s));
}

TEST(Weyl, SimpleReflectionsAreInvolutions) {
  for (auto f : families()) {
    System s = make_system(f, 4);
    for (int i = 0; i <= 4; ++i) {
      Element si = simple_reflection(s, i);
      EXPECT_EQ(multiply(s, si, si), identity(s));
      EXPECT_EQ(length(s, si), 1);
      EXPECT_EQ(affine_reflection(s, simple_affine_root(s, i)), si);
      EXPECT_EQ(act(s, si, simple_affine_root(s, i)), -simple_affine_root(s, i));
    }
  }
}

TEST(Weyl, LambdaOfSimpleReflection) {
  System s = make_system(Family::B, 3);
  auto l = lambda_set(s, simple_reflection(s, 0));
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0], simple_affine_root(s, 0));
  EXPECT_EQ(simple_index(s, l[0]), 0);
}

TEST(Weyl, ReducedWordRoundTrip) {
  for (auto f : families()) {
    System s = make_system(f, 4);
    Element e = from_word(s, {0, 1, 2, 3, 4, 0, 2, 1});
    auto w = reduced_word(s, e);
    EXPECT_EQ(int(w.size()), length(s, e));
    EXPECT_EQ(from_word(s, w), e);
  }
}

TEST(Weyl, NonReducedPosition) {
  System s = make_system(Family::B, 3);
  try {
    lambda_sequence(s, {1, 2, 2});
    FAIL();
  } catch (const NonReduced& e) {
    EXPECT_EQ(e.position, 3);
  }
}

TEST(Weyl, InvalidSequenceRejected) {
  System s = make_system(Family::B, 3);
  EXPECT_THROW(word_from_lambda(s, {AffineRoot{{1, 1, 0}, 0}}), InvalidSequence);
}

TEST(Weyl, PiGroupSizes) {
  // |P / Q|
  EXPECT_EQ(pi_group(make_system(Family::A, 3)).size(), 4u);
  EXPECT_EQ(pi_group(make_system(Family::B, 3)).size(), 2u);
  EXPECT_EQ(pi_group(make_system(Family::C, 3)).size(), 2u);
  EXPECT_EQ(pi_group(make_system(Family::D, 4)).size(), 4u);
  EXPECT_EQ(pi_group(make_system(Family::D, 5)).size(), 4u);
  for (auto f : families()) {
    System s = make_system(f, 4);
    for (auto& p : pi_group(s)) EXPECT_EQ(length(s, p), 0);
  }
}

TEST(Weyl, PiDecomposition) {
  for (auto f : families()) {
    System s = make_system(f, 3 + (f == Family::D));
    for (auto& b2 : weight_box(s, 1)) {
      auto pd = pi_decompose(s, b2);
      Element t = translation2(s, b2);
      EXPECT_EQ(multiply(s, pd.pi, from_perm(s, pd.u)), t);
      EXPECT_EQ(length(s, t), length(s, pd.pi) + perm_length(s, pd.u));
      for (auto& r : lambda_set(s, pd.pi)) EXPECT_NE(r.k, 0);
    }
  }
}

TEST(Weyl, LengthIsInversionCount) {
  System s = make_system(Family::D, 4);
  Element e = from_word(s, {0, 2, 1, 3, 4, 2, 0});
  EXPECT_EQ(length(s, e), int(lambda_set(s, e).size()));
  EXPECT_EQ(length(s, e), 7);
}
