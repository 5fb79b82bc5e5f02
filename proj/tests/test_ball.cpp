#include <gtest/gtest.h>

#include <vector>

#include "wngt/ball.hpp"

using namespace wngt;

namespace {

// Poincare series of the affine group: prod_i [d_i]_t / (1 - t^(d_i - 1)).
std::vector<long> poincare(const std::vector<int>& degrees, int R) {
  std::vector<long> p(R + 1, 0);
  p[0] = 1;
  for (int d : degrees) {
    std::vector<long> q(R + 1, 0);
    for (int i = 0; i <= R; ++i)
      for (int j = 0; j < d && i + j <= R; ++j) q[i + j] += p[i];
    for (int i = d - 1; i <= R; ++i) q[i] += q[i - d + 1];
    p = q;
  }
  return p;
}

void check_growth(Family f, int n, const std::vector<int>& deg, int R) {
  System s = make_system(f, n);
  Ball b = ball_parallel(s, R);
  auto p = poincare(deg, R);
  for (int l = 0; l <= R; ++l)
    EXPECT_EQ(b.level_start[l + 1] - b.level_start[l], p[l]) << s.name() << " length " << l;
}

}  // namespace

TEST(Ball, GrowthMatchesPoincareSeries) {
  check_growth(Family::A, 3, {2, 3, 4}, 12);
  check_growth(Family::B, 3, {2, 4, 6}, 12);
  check_growth(Family::C, 3, {2, 4, 6}, 12);
  check_growth(Family::D, 4, {2, 4, 4, 6}, 10);
}

TEST(Ball, SerialAndParallelAgree) {
  for (auto [f, n] : {std::pair{Family::B, 3}, {Family::D, 4}}) {
    System s = make_system(f, n);
    Ball a = ball_serial(s, 8), b = ball_parallel(s, 8, 2);
    ASSERT_EQ(a.size(), b.size());
    std::vector<Element> x = a.elems, y = b.elems;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    EXPECT_EQ(x, y);
  }
}

TEST(Ball, WordsAreReduced) {
  System s = make_system(Family::C, 3);
  Ball b = ball_parallel(s, 9);
  for (size_t i = 0; i < b.size(); ++i) {
    auto w = b.word(i);
    EXPECT_EQ(int(w.size()), b.length_of(i));
    EXPECT_EQ(from_word(s, w), b.elems[i]);
    EXPECT_EQ(length(s, b.elems[i]), b.length_of(i));
  }
}
