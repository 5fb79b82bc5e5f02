// Almost dominant weights, the elements varpi_b^ae, subsystem extension and
// the passage from affine to nonaffine minimal NGT.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wngt/words.hpp"

namespace wngt {

struct NotAlmostDominant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BarNotAlmostDominant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BetaNegative : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ConditionsFailed : std::runtime_error {
  std::vector<std::string> failed;
  explicit ConditionsFailed(std::vector<std::string> f);
};

// (b, alpha_j) >= 0 for j != k and (b, alpha_k) <= 0; k is 1-based.
bool almost_dominant(const System& sys, const Vec& b2, int k);
// All k for which b is almost dominant.
std::vector<int> almost_dominant_indices(const System& sys, const Vec& b2);

// -w0(x), and the matching permutation of simple indices.
Vec varsigma(const System& sys, const Vec& x);
int varsigma_index(const System& sys, int j);

struct GammaB {
  std::vector<std::vector<int>> components;  // connected pieces of Gamma^b
  std::vector<int> removed;                  // j with (b, alpha_j) != 0
  std::optional<int> dot_removed;            // k when (b, alpha_k) = 0
  std::vector<int> dot_vertices;             // Gamma^b minus alpha_k
};

GammaB gamma_b(const System& sys, const Vec& b2, int k);
SignedPerm dot_w0(const System& sys, const Vec& b2, int k);
// Positive roots of the parabolic subsystem on dot_vertices.
std::vector<Vec> dot_positive_roots(const System& sys, const Vec& b2, int k);

struct VarpiReport {
  bool a = false, b = false;              // length additivity
  bool a_tilde = false, b_tilde = false;  // no stray simple roots
  bool a1 = false, b1 = false;            // lambda of the products
  bool a2 = false, b2 = false;            // inclusions with cancelling union
  bool alpha = false, beta = false;       // extra length conditions
  bool a3 = false, b3 = false;            // inclusions without lambda terms
  bool vth_b = false, vth_bar = false;    // alpha_0 absent on both sides
  bool inverse_identity = false;          // varpi^-1 = varpi_{bar b}^{bar ae}
  bool involutive = false;                // bar(bar(b, ae)) = (b, ae)
  bool endpoint_formula = false;          // -varpi^-1(alpha_k) = [beta, p]
  bool p_zero = false;                    // flagged, not a failure
  bool valid() const { return a && b && vth_b && vth_bar; }
  std::vector<std::string> failed() const;
};

struct VarpiData {
  Vec b2;
  int k = 0;
  SignedPerm ae;
  SignedPerm upsilon;  // w0 ae dot_w0^b
  Element varpi;       // b upsilon^-1
  Vec bar_b2;
  int bar_k = 0;
  SignedPerm bar_ae;
  Vec beta;
  int p = 0;
  std::optional<Triple> triple;  // when alpha_bar_k + beta is a root
  VarpiReport report;
};

// Computes varpi_b^ae and its report. bar_k = 0 picks the first index that
// makes the report valid (or the first candidate). Throws NotAlmostDominant,
// BarNotAlmostDominant.
VarpiData analyze_varpi(const System& sys, const Vec& b2, int k, const SignedPerm& ae,
                        int bar_k = 0);
// Same, but throws ConditionsFailed unless the report is valid.
VarpiData build_varpi(const System& sys, const Vec& b2, int k, const SignedPerm& ae,
                      int bar_k = 0);

// Diagram condition ae(Gamma^b_.) = varsigma(Gamma^{bar b}_.), ae(alpha_k) =
// varsigma(alpha_{bar k}). Its consequences are asserted (std::logic_error).
bool check_siupsb(const System& sys, const Vec& b2, int k, const SignedPerm& ae, int bar_k = 0);

// pi_b for b = -m omega_i + sum_{r != i} c_r omega_r; c has rank entries, c[i-1] ignored.
Element vthpib_family(const System& sys, int i, int m, const std::vector<int>& c);

// b (upsilon')^-1 with upsilon' = w0' dot_w0'^{b'} computed on the subdiagram.
Element subsys_extend(const System& sys, const std::vector<int>& sub, const Vec& b_prime2,
                      const Vec& b2);

struct NonaffineResult {
  std::optional<SignedPerm> u;
  std::vector<std::string> diagnostics;
};
// u from varpi = pi u, accepted when every last root beta' of lambda(u) has
// (ae^varsigma)^-1(beta') > 0 and u is a minimal NGT. Throws BetaNegative.
NonaffineResult nonaffine_from_affine(const System& sys, const VarpiData& v);

// Doubled weights of P with all |b_i| <= bound (A: canonical representatives).
std::vector<Vec> weight_box(const System& sys, int bound);
// All elements of the finite Weyl group, or those of length <= max_len.
std::vector<SignedPerm> finite_weyl(const System& sys, int max_len = -1);

}  // namespace wngt
