// Balls in the Cayley graph of the affine Weyl group (generators s_0..s_n).
#pragma once

#include <vector>

#include "wngt/weyl.hpp"

namespace wngt {

struct Ball {
  System sys;
  int radius = 0;
  std::vector<Element> elems;
  std::vector<int> parent;   // -1 for the identity
  std::vector<int> gen;      // elems[i] = s_gen[i] * elems[parent[i]]
  std::vector<int> level_start;  // elements of length l are [level_start[l], level_start[l+1])

  size_t size() const { return elems.size(); }
  int length_of(size_t i) const;
  // Reduced word in application order.
  std::vector<int> word(size_t i) const;
};

// Queue-based reference implementation.
Ball ball_serial(const System& sys, int radius);
// Level-synchronous OpenMP implementation; each level is sorted by element.
Ball ball_parallel(const System& sys, int radius, int threads = 0);

}  // namespace wngt
