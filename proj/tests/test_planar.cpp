#include <gtest/gtest.h>

#include <regex>

#include "wngt/ngt.hpp"
#include "wngt/catalog.hpp"
#include "wngt/planar.hpp"

using namespace wngt;

namespace {

int count(const std::string& s, const std::string& pat) {
  int c = 0;
  for (size_t p = s.find(pat); p != std::string::npos; p = s.find(pat, p + 1)) ++c;
  return c;
}

}  // namespace

TEST(Planar, InvalidData) {
  auto bad = [](BPositiveData d) { EXPECT_THROW(validate(d), InvalidData); };
  bad({5, 0, 0, {3}, {1}});            // v >= 1
  bad({5, 2, 2, {1}, {1}});            // n - u - v >= 2
  bad({5, 0, 2, {2}, {1}});            // sizes add up
  bad({5, 0, 2, {2, 1}, {0, 1}});      // last bunch has two lines
  bad({5, 0, 2, {1, 2}, {1, 1}});      // strictly increasing t
  bad({5, 0, 2, {1, 2}, {-1, 1}});     // nonnegative t
  bad({5, 0, 2, {3}, {}});             // p, t lengths
  EXPECT_NO_THROW(validate({5, 0, 2, {3}, {1}}));
}

TEST(Planar, DataCount) {
  // n = 3: only u = 0, v = 1, p = (2)
  EXPECT_EQ(bpositive_data(3, 2).size(), 3u);
  for (auto& d : bpositive_data(6, 2)) EXPECT_NO_THROW(validate(d));
}

TEST(Planar, BPositiveAnglesAndProfiles) {
  for (int n = 3; n <= 6; ++n) {
    System s = make_system(Family::B, n);
    for (auto& d : bpositive_data(n, 2)) {
      Element e = bpositive_element(d);
      Configuration cfg = config_from_bpositive(d);
      EXPECT_EQ(element_from_angles(s, cfg), e);
      EXPECT_EQ(angles_as_lambda(s, cfg), lambda_sequence(s, word_from_config(s, cfg).g));
      EXPECT_EQ(iota_b_element(s, iota_b_element(s, e)), e);
      auto prof = line_profiles(cfg);
      int tops = 0;
      for (auto& p : prof) tops += p.t_count;
      int expect = 0;
      for (size_t j = 0; j < d.p.size(); ++j) expect += d.p[j] * d.t[j];
      EXPECT_EQ(tops, expect) << data_str(d);
    }
  }
}

TEST(Planar, ConfigWordRoundTrip) {
  System c = make_system(Family::C, 4);
  Word w{0, {4, 3, 2, 0, 4, 3, 2, 1, 4, 3, 2, 0}};
  Configuration cfg = config_from_word(c, w);
  EXPECT_EQ(from_word(c, word_from_config(c, cfg).g), from_word(c, w.g));
  EXPECT_EQ(element_from_angles(c, cfg), from_word(c, w.g));
}

TEST(Planar, NotReduced) {
  System b = make_system(Family::B, 3);
  Configuration cfg{3, {{EventKind::Top, 1}, {EventKind::Top, 1}}};
  EXPECT_THROW(word_from_config(b, cfg), NotReducedConfig);
}

TEST(Planar, ParityViolation) {
  System c = make_system(Family::C, 3);
  try {
    regroup_to_cd(c, {0, 1, 2});
    FAIL();
  } catch (const ParityViolation& e) {
    EXPECT_EQ(e.which, "top");
  }
  System d = make_system(Family::D, 4);
  EXPECT_THROW(regroup_to_cd(d, {4, 3}), ParityViolation);
  EXPECT_EQ(regroup_to_cd(c, {0, 1, 0}), std::vector<int>{0});
  EXPECT_EQ(regroup_to_cd(d, {4, 3, 4}), std::vector<int>{4});
}

TEST(Planar, ParityCorrectSides) {
  EXPECT_EQ(parity_correct(3, {1, 2}, Side::TopRight), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(parity_correct(3, {1, 2}, Side::TopLeft), (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(parity_correct(3, {1, 2}, Side::BottomLeft), (std::vector<int>{1, 2, 3}));
  System b = make_system(Family::B, 3);
  EXPECT_EQ(parity_correct_element(3, from_word(b, {1, 2}), Side::BottomRight), from_word(b, {3, 1, 2}));
}

TEST(Planar, IotaC) {
  EXPECT_EQ(iota_c({0, 1, 2, 1, 0}), (std::vector<int>{1, 0, 2, 0, 1}));
  System c = make_system(Family::C, 3);
  Element e = from_word(c, {0, 1, 2, 3});
  EXPECT_EQ(iota_c_element(c, e), from_word(c, iota_c({0, 1, 2, 3})));
}

TEST(Planar, SvgDeterministic) {
  BPositiveData d{5, 0, 2, {3}, {1}};
  Configuration cfg = config_from_bpositive(d);
  std::string a = render_svg(cfg), b = render_svg(cfg);
  EXPECT_EQ(a, b);
  EXPECT_EQ(count(a, "<polyline"), 5);
  EXPECT_EQ(count(a, "class=\"mirror\""), 2);
  std::string bare = render_svg(cfg, {40, 30, 30, false});
  EXPECT_EQ(count(bare, "class=\"event\""), 0);
  EXPECT_GT(count(a, "class=\"event\""), 0);
  EXPECT_TRUE(std::regex_search(a, std::regex("^<\\?xml")));
}
