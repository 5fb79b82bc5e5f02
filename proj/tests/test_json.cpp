#include <gtest/gtest.h>

#include <sstream>

#include "wngt/json_io.hpp"

using namespace wngt;

TEST(Json, ElementRoundTrip) {
  Element e{{-2, -2, 0, 0}, {{-2, -1, 3, 4}}};
  EXPECT_EQ(element_from_json(to_json(e)), e);
  AffineRoot r{{1, 0, -1}, 2};
  EXPECT_EQ(root_from_json(to_json(r)), r);
}

TEST(Json, ConfigRoundTrip) {
  Configuration cfg = config_from_bpositive({5, 0, 2, {3}, {1}});
  EXPECT_EQ(config_from_json(to_json(cfg)), cfg);
  EXPECT_EQ(to_json(cfg)["format"], 1);
}

TEST(Json, CatalogRoundTrip) {
  Catalog c = catalog_cd(Family::D, 4, 12);
  std::stringstream ss;
  write_catalog(ss, c);
  std::string first = ss.str();
  Catalog back = read_catalog(ss);
  EXPECT_EQ(back.sys, c.sys);
  EXPECT_EQ(back.max_length, 12);
  ASSERT_EQ(back.size(), c.size());
  for (auto& [e, r] : c.records) {
    auto& q = back.records.at(e);
    EXPECT_EQ(q.triple, r.triple);
    EXPECT_EQ(q.provenance.detail, r.provenance.detail);
    EXPECT_EQ(q.provenance.kind, r.provenance.kind);
  }
  std::stringstream again;
  write_catalog(again, back);
  EXPECT_EQ(again.str(), first);
}

TEST(Json, RejectsTamperedRecord) {
  Catalog c = brute_enumerate(make_system(Family::B, 3), 12);
  std::stringstream ss;
  write_catalog(ss, c);
  std::string s = ss.str();
  // corrupt the first triple level
  auto p = s.find("\"k\":0");
  ASSERT_NE(p, std::string::npos);
  s.replace(p, 5, "\"k\":4");
  std::stringstream in(s);
  EXPECT_THROW(read_catalog(in), FormatError);
  std::stringstream garbage("{\"format\":1\nnot json\n");
  EXPECT_THROW(read_catalog(garbage), FormatError);
}
