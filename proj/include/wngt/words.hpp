// Coxeter moves on reduced words, gatherability of triples, endpoints.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "wngt/weyl.hpp"

namespace wngt {

// gamma = alpha + beta; alpha is the earlier root of the lambda-sequence.
struct Triple {
  AffineRoot beta, gamma, alpha;
  bool operator==(const Triple&) const = default;
};

// long+long=long in B, short+short=short in C, anything in A and D.
bool length_rule(const System& sys, const Triple& t);
bool is_triple(const System& sys, const Triple& t);

// Order of s_i s_j in the affine group; 0 stands for infinity.
int coxeter_m(const System& sys, int i, int j);

struct Move {
  int pos = 0;  // 0-based start of the rewritten block
  int m = 0;    // block length 2, 3 or 4
  bool operator==(const Move&) const = default;
};

struct Neighbor {
  std::vector<int> word;
  Move move;
};

// All words one Coxeter move away. Throws NonReduced.
std::vector<Neighbor> coxeter_neighbors(const System& sys, const std::vector<int>& word);
// Same without the reducedness check; moves inside [lo, hi] only.
std::vector<Neighbor> coxeter_neighbors_in(const System& sys, const std::vector<int>& word,
                                           int lo, int hi);

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

size_t default_cap();  // WNGT_CAP or 1e6

std::vector<std::vector<int>> all_reduced_words(const System& sys, const Element& e,
                                                size_t cap = default_cap());
std::vector<std::vector<int>> all_reduced_words_from(const System& sys,
                                                     const std::vector<int>& word,
                                                     size_t cap = default_cap());

enum class GatherOutcome { Gatherable, NonGatherable, CapExceeded };

struct GatherOptions {
  bool frozen_segment = false;  // keep the initial segment instead of shrinking it
  size_t cap = default_cap();
};

struct GatherResult {
  GatherOutcome outcome = GatherOutcome::NonGatherable;
  std::vector<Move> witness;  // positions refer to the full word
  std::vector<int> witness_word;
  size_t states = 0;
};

struct TripleAbsent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

GatherResult is_gatherable(const System& sys, const std::vector<int>& word, const Triple& t,
                           const GatherOptions& opt = {});

// Triples of the lambda-sequence of a reduced word, each with alpha before beta.
std::vector<Triple> triples_in(const System& sys, const std::vector<int>& word);

struct Endpoints {
  std::optional<AffineRoot> first, last;
};
Endpoints nonmovable_endpoints(const System& sys, const Element& e);
// Simple roots in lambda(e).
std::vector<int> simple_in_lambda(const System& sys, const Element& e);

std::optional<Triple> is_minimal_ngt(const System& sys, const Element& e);

struct RankTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Subsystem test: true iff no B3/C3/D4 subsystem cuts the segment of the word
// between alpha and beta down to a non-gatherable configuration of the triple.
bool admissible(const System& sys, const std::vector<int>& word, const Triple& t);
// Same on reduced_word(e).
bool admissible(const System& sys, const Element& e, const Triple& t);

}  // namespace wngt
