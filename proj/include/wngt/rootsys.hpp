// Classical finite root systems in epsilon coordinates (twisted normalization).
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wngt {

enum class Family { A, B, C, D };

char family_char(Family f);
Family family_from_char(char c);

using Vec = std::vector<int>;

struct System {
  Family family = Family::B;
  int rank = 3;

  // Ambient dimension: rank + 1 for A (sum-zero embedding), rank otherwise.
  int dim() const { return family == Family::A ? rank + 1 : rank; }
  // Scale of the form: (e_i, e_j) = form_scale * delta_ij.
  int form_scale() const { return family == Family::B ? 2 : 1; }
  std::string name() const;
  bool operator==(const System&) const = default;
};

struct InvalidSystem : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Throws InvalidSystem when the rank is out of range for the family.
System make_system(Family f, int rank);

// alpha_1 .. alpha_n.
std::vector<Vec> simple_roots(const System& sys);
// Maximal short root.
Vec theta_short(const System& sys);

int inner(const System& sys, const Vec& x, const Vec& y);
// Pairing of an integer vector with a weight stored in doubled coordinates.
int inner_half(const System& sys, const Vec& x, const Vec& b2);
int nu(const System& sys, const Vec& r);
// (x, r^vee) for integer x; x may also be a doubled weight, giving 2(x/2, r^vee).
int pair_coroot(const System& sys, const Vec& x, const Vec& r);
// x - (x, r^vee) r. Linear, so it also acts on doubled weights.
Vec reflect(const System& sys, const Vec& mirror, const Vec& x);

bool is_root(const System& sys, const Vec& v);
// First nonzero coordinate positive.
bool is_positive_vec(const Vec& v);
std::vector<Vec> positive_roots(const System& sys);
std::vector<Vec> all_roots(const System& sys);

// Fundamental weight omega_i (1-based) in doubled coordinates.
Vec fundamental_weight2(const System& sys, int i);
// Canonical representative of a doubled weight (A: shift so the last entry is 0).
Vec canonical_weight2(const System& sys, Vec b2);
bool in_weight_lattice2(const System& sys, const Vec& b2);
bool in_root_lattice2(const System& sys, const Vec& b2);

Vec vadd(Vec a, const Vec& b);
Vec vsub(Vec a, const Vec& b);
Vec vneg(Vec a);
Vec vscale(Vec a, int c);
bool is_zero(const Vec& v);
std::string vec_str(const Vec& v);

}  // namespace wngt
