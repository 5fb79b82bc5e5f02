// Minimal NGT catalogs: brute force over group balls and the planar constructions.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wngt/planar.hpp"
#include "wngt/words.hpp"

namespace wngt {

struct Provenance {
  enum class Kind { BruteForce, BPositive, IotaB, ParityCorrected, VarpiConstruction, SubsysExtension };
  Kind kind = Kind::BruteForce;
  std::string detail;  // data, correction recipe, or construction parameters
};

std::string kind_name(Provenance::Kind k);
Provenance::Kind kind_from_name(const std::string& s);

struct NgtRecord {
  Element element;
  Triple triple;
  Provenance provenance;
  int length = 0;
  int k = 0;  // the unique simple root in lambda(e)
};

struct Catalog {
  System sys;
  int max_length = 0;
  std::map<Element, NgtRecord> records;
  // construction counters (catalog_cd): candidates dropped by the horizontal-line
  // rule, and how many of those is_minimal_ngt also rejects
  int excluded_by_rule = 0;
  int excluded_confirmed = 0;
  int failed_validation = 0;

  size_t size() const { return records.size(); }
};

// Re-checks the record against is_minimal_ngt.
bool revalidate(const System& sys, const NgtRecord& r);

// Every element of length <= max_len that is a minimal NGT; each one is confirmed
// non-gatherable by BFS on one reduced word. Throws CapExceeded.
Catalog brute_enumerate(const System& sys, int max_len, int threads = 0);

std::string data_str(const BPositiveData& d);

// B-positive elements and their iota_B images up to the length bound.
Catalog catalog_b(int n, int max_len);
// Parity-corrected images of the B-positive elements in C or D.
Catalog catalog_cd(Family family, int n, int max_len);

struct CrossReport {
  bool equal = true;
  std::vector<Element> missing;  // in the first catalog only
  std::vector<Element> extra;    // in the second catalog only
  std::string diagnostics;
};
CrossReport cross_validate(const Catalog& c1, const Catalog& c2);

}  // namespace wngt
