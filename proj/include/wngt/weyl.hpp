// Affine Weyl group elements b*w, affine roots, lengths and lambda-sets.
#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wngt/rootsys.hpp"

namespace wngt {

// [a, k]; k is the level, a multiple of nu(a).
struct AffineRoot {
  Vec a;
  int k = 0;
  auto operator<=>(const AffineRoot&) const = default;
  bool operator==(const AffineRoot&) const = default;
};

AffineRoot operator+(const AffineRoot& x, const AffineRoot& y);
AffineRoot operator-(const AffineRoot& x, const AffineRoot& y);
AffineRoot operator-(const AffineRoot& x);
std::string root_str(const AffineRoot& r);

bool is_affine_root(const System& sys, const AffineRoot& r);
bool is_positive(const AffineRoot& r);
// alpha_0 = [-theta, 1] for i = 0, [alpha_i, 0] otherwise.
AffineRoot simple_affine_root(const System& sys, int i);
// Index i with r == alpha_i, or -1.
int simple_index(const System& sys, const AffineRoot& r);

// slots[i] is the signed (1-based) line in slot i; w(e_|s|) = sgn(s) e_i.
struct SignedPerm {
  std::vector<int> s;
  auto operator<=>(const SignedPerm&) const = default;
  bool operator==(const SignedPerm&) const = default;
};

SignedPerm perm_identity(int dim);
Vec perm_apply(const SignedPerm& w, const Vec& x);
SignedPerm perm_mul(const SignedPerm& a, const SignedPerm& b);
SignedPerm perm_inv(const SignedPerm& w);
SignedPerm perm_reflection(const System& sys, const Vec& root);
bool perm_in_group(const System& sys, const SignedPerm& w);
// Number of positive roots sent to negative ones.
int perm_length(const System& sys, const SignedPerm& w);
std::vector<Vec> perm_lambda(const System& sys, const SignedPerm& w);
SignedPerm longest_element(const System& sys);
// Longest element of the parabolic subgroup on the given simple indices (1-based).
SignedPerm parabolic_longest(const System& sys, const std::vector<int>& J);
// sigma(w) = w0 w w0.
SignedPerm perm_sigma(const System& sys, const SignedPerm& w);
// Simple-reflection word (application order) for a finite element.
std::vector<int> perm_word(const System& sys, const SignedPerm& w);
std::string perm_str(const SignedPerm& w);

// The element x -> w(x) + b, with b stored doubled.
struct Element {
  Vec b2;
  SignedPerm w;
  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;
};

struct ElementHash {
  size_t operator()(const Element& e) const;
};

Element identity(const System& sys);
Element translation2(const System& sys, const Vec& b2);
Element from_perm(const System& sys, const SignedPerm& w);
Element simple_reflection(const System& sys, int i);
// s_{[a,k]} = (-k a^vee, s_a).
Element affine_reflection(const System& sys, const AffineRoot& r);
Element multiply(const System& sys, const Element& x, const Element& y);
Element inverse(const System& sys, const Element& x);
AffineRoot act(const System& sys, const Element& e, const AffineRoot& r);
Vec translation_half(const Element& e);  // b/2 exact, throws on half weights
std::string element_str(const Element& e);

// A word in application order: the element is pi * s_{g[l-1]} ... s_{g[0]}.
struct Word {
  int pi = 0;  // index into pi_group, 0 = identity
  std::vector<int> g;
  bool operator==(const Word&) const = default;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

Element from_word(const System& sys, const std::vector<int>& word);
Element from_ext_word(const System& sys, const Word& word);

// Direct scan over roots and the level range fixed by (w(a), b).
std::vector<AffineRoot> lambda_set(const System& sys, const Element& e);
int length(const System& sys, const Element& e);
// Some reduced word (application order) for an element of the non-extended group.
std::vector<int> reduced_word(const System& sys, const Element& e);

struct NonReduced : std::runtime_error {
  int position;  // 1-based index of the first cancelling letter
  explicit NonReduced(int p)
      : std::runtime_error("word is not reduced at position " + std::to_string(p)),
        position(p) {}
};
struct InvalidSequence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// alpha^1 = alpha_{g0}, alpha^p = s_{g0}..s_{g(p-2)}(alpha_{g(p-1)}). Throws NonReduced.
std::vector<AffineRoot> lambda_sequence(const System& sys, const std::vector<int>& word);
// Inverse of lambda_sequence. Throws InvalidSequence.
std::vector<int> word_from_lambda(const System& sys, const std::vector<AffineRoot>& seq);

struct LambdaCheck {
  bool ok = true;
  std::string clause;  // "i", "ii", "iii" or "positivity"/"distinct"
  std::vector<AffineRoot> witnesses;
};
// Intrinsic conditions (i)-(iii) including their ordering requirements.
LambdaCheck validate_lambda(const System& sys, const std::vector<AffineRoot>& seq);

struct PiDecomposition {
  Element pi;
  SignedPerm u;
};
// e = pi * u with lambda(pi) free of level-zero roots.
PiDecomposition decompose(const System& sys, const Element& e);
PiDecomposition pi_decompose(const System& sys, const Vec& b2);
// Length-zero elements of the extended group; index 0 is the identity.
std::vector<Element> pi_group(const System& sys);
int pi_index(const System& sys, const Element& e);  // -1 when not in the group

// Conjugation by a pi-group element on generator indices: pi s_i pi^-1 = s_{perm[i]}.
std::vector<int> pi_index_permutation(const System& sys, const Element& pi);

}  // namespace wngt
