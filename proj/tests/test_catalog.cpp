#include <gtest/gtest.h>

#include "wngt/catalog.hpp"

using namespace wngt;

namespace {

// Sizes derived from the brute-force enumeration of this code base.
struct Frozen {
  Family f;
  int n, L;
  size_t size;
};
const Frozen kFrozen[] = {
    {Family::B, 3, 12, 2}, {Family::C, 3, 12, 2}, {Family::D, 4, 12, 4},
    {Family::B, 3, 22, 4}, {Family::C, 3, 24, 6}, {Family::D, 4, 20, 8}, {Family::B, 4, 14, 6},
};

Catalog construct(Family f, int n, int L) { return f == Family::B ? catalog_b(n, L) : catalog_cd(f, n, L); }

}  // namespace

TEST(Catalog, ConstructionMatchesBruteForce) {
  for (auto& c : kFrozen) {
    System s = make_system(c.f, c.n);
    Catalog brute = brute_enumerate(s, c.L);
    Catalog cons = construct(c.f, c.n, c.L);
    EXPECT_EQ(brute.size(), c.size) << s.name() << " " << c.L;
    auto rep = cross_validate(brute, cons);
    EXPECT_TRUE(rep.equal) << s.name() << " " << c.L << "\n" << rep.diagnostics;
    EXPECT_EQ(cons.failed_validation, 0);
    EXPECT_EQ(cons.excluded_by_rule, cons.excluded_confirmed);
    for (auto& [e, r] : cons.records) EXPECT_TRUE(revalidate(s, r));
  }
}

TEST(Catalog, EmptyInTypeA) {
  EXPECT_EQ(brute_enumerate(make_system(Family::A, 4), 10).size(), 0u);
}

TEST(Catalog, CrossValidateReportsDifferences) {
  Catalog a = brute_enumerate(make_system(Family::B, 3), 12);
  Catalog b = a;
  auto e = b.records.begin()->first;
  b.records.erase(b.records.begin());
  auto rep = cross_validate(a, b);
  EXPECT_FALSE(rep.equal);
  ASSERT_EQ(rep.missing.size(), 1u);
  EXPECT_EQ(rep.missing[0], e);
  EXPECT_NE(rep.diagnostics.find("lambda"), std::string::npos);
}

TEST(Catalog, KindNames) {
  for (auto k : {Provenance::Kind::BruteForce, Provenance::Kind::IotaB, Provenance::Kind::SubsysExtension})
    EXPECT_EQ(kind_from_name(kind_name(k)), k);
  EXPECT_THROW(kind_from_name("nope"), std::invalid_argument);
}

TEST(Catalog, CdRejectsOtherFamilies) {
  EXPECT_THROW(catalog_cd(Family::B, 3, 10), std::invalid_argument);
}
