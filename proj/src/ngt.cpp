#include "wngt/ngt.hpp"

#include <algorithm>
#include <set>

namespace wngt {

ConditionsFailed::ConditionsFailed(std::vector<std::string> f)
    : std::runtime_error([&] {
        std::string s = "conditions failed:";
        for (auto& x : f) s += " " + x;
        return s;
      }()),
      failed(std::move(f)) {}

namespace {

int pair_sign(const System& sys, const Vec& b2, int j) {
  int v = inner_half(sys, simple_roots(sys)[j - 1], b2);
  return (v > 0) - (v < 0);
}

std::set<Vec> apply_all(const SignedPerm& w, const std::vector<Vec>& xs) {
  std::set<Vec> out;
  for (auto& x : xs) out.insert(perm_apply(w, x));
  return out;
}

// Union with the pairs {x, -x} removed.
std::set<Vec> cancel_union(const std::set<Vec>& a, const std::set<Vec>& b) {
  std::set<Vec> all = a;
  all.insert(b.begin(), b.end());
  std::set<Vec> out;
  for (auto& x : all)
    if (!all.count(vneg(x))) out.insert(x);
  return out;
}

bool includes(const std::set<Vec>& big, const std::set<Vec>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::set<Vec> varsigma_set(const System& sys, const std::vector<Vec>& xs) {
  std::set<Vec> out;
  for (auto& x : xs) out.insert(varsigma(sys, x));
  return out;
}

int theta_pair(const System& sys, const Vec& b2) { return inner_half(sys, theta_short(sys), b2); }

bool vth(const System& sys, const Vec& b2, const SignedPerm& dw, const SignedPerm& ae) {
  int t = theta_pair(sys, b2);
  if (t <= 0) return true;
  if (t != 1) return false;
  auto lam = perm_lambda(sys, ae);
  Vec x = perm_apply(dw, theta_short(sys));
  return std::find(lam.begin(), lam.end(), x) == lam.end();
}

SignedPerm bar_of(const System& sys, const Vec& b2, int k, const SignedPerm& ae,
                  const Vec& bar_b2, int bar_k) {
  SignedPerm ds = perm_sigma(sys, dot_w0(sys, b2, k));
  return perm_mul(perm_mul(ds, perm_sigma(sys, perm_inv(ae))), dot_w0(sys, bar_b2, bar_k));
}

}  // namespace

bool almost_dominant(const System& sys, const Vec& b2, int k) {
  if (k < 1 || k > sys.rank) return false;
  for (int j = 1; j <= sys.rank; ++j) {
    int s = pair_sign(sys, b2, j);
    if (j == k ? s > 0 : s < 0) return false;
  }
  return true;
}

std::vector<int> almost_dominant_indices(const System& sys, const Vec& b2) {
  std::vector<int> out;
  for (int k = 1; k <= sys.rank; ++k)
    if (almost_dominant(sys, b2, k)) out.push_back(k);
  return out;
}

Vec varsigma(const System& sys, const Vec& x) {
  return vneg(perm_apply(longest_element(sys), x));
}

int varsigma_index(const System& sys, int j) {
  Vec s = varsigma(sys, simple_roots(sys)[j - 1]);
  return simple_index(sys, {s, 0});
}

GammaB gamma_b(const System& sys, const Vec& b2, int k) {
  if (!almost_dominant(sys, b2, k)) throw NotAlmostDominant("b is not almost dominant at k");
  GammaB g;
  std::vector<int> verts;
  for (int j = 1; j <= sys.rank; ++j) {
    if (pair_sign(sys, b2, j) != 0) g.removed.push_back(j);
    else verts.push_back(j);
  }
  if (pair_sign(sys, b2, k) == 0) g.dot_removed = k;
  for (int j : verts)
    if (j != k) g.dot_vertices.push_back(j);
  auto simple = simple_roots(sys);
  std::set<int> left(verts.begin(), verts.end());
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (size_t h = 0; h < comp.size(); ++h)
      for (auto it = left.begin(); it != left.end();) {
        if (inner(sys, simple[comp[h] - 1], simple[*it - 1]) != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    std::sort(comp.begin(), comp.end());
    g.components.push_back(comp);
  }
  return g;
}

SignedPerm dot_w0(const System& sys, const Vec& b2, int k) {
  return parabolic_longest(sys, gamma_b(sys, b2, k).dot_vertices);
}

std::vector<Vec> dot_positive_roots(const System& sys, const Vec& b2, int k) {
  return perm_lambda(sys, dot_w0(sys, b2, k));
}

std::vector<std::string> VarpiReport::failed() const {
  std::vector<std::string> out;
  if (!a) out.push_back("a");
  if (!b) out.push_back("b");
  if (!vth_b) out.push_back("theta(b)");
  if (!vth_bar) out.push_back("theta(bar b)");
  return out;
}

VarpiData analyze_varpi(const System& sys, const Vec& b2_in, int k, const SignedPerm& ae,
                        int bar_k) {
  Vec b2 = canonical_weight2(sys, b2_in);
  if (!almost_dominant(sys, b2, k)) throw NotAlmostDominant("b is not almost dominant at k");
  const SignedPerm w0 = longest_element(sys);
  VarpiData v;
  v.b2 = b2;
  v.k = k;
  v.ae = ae;
  SignedPerm dw = dot_w0(sys, b2, k);
  v.upsilon = perm_mul(perm_mul(w0, ae), dw);
  v.varpi = Element{b2, perm_inv(v.upsilon)};
  v.bar_b2 = canonical_weight2(sys, vneg(perm_apply(w0, perm_apply(ae, b2))));
  auto cands = almost_dominant_indices(sys, v.bar_b2);
  if (bar_k) {
    if (std::find(cands.begin(), cands.end(), bar_k) == cands.end())
      throw BarNotAlmostDominant("bar b is not almost dominant at the given index");
    cands = {bar_k};
  }
  if (cands.empty()) throw BarNotAlmostDominant("bar b is not almost dominant");

  auto simple = simple_roots(sys);
  VarpiData best;
  bool have = false;
  for (int kb : cands) {
    VarpiData d = v;
    d.bar_k = kb;
    SignedPerm dwb = dot_w0(sys, d.bar_b2, kb);
    d.bar_ae = bar_of(sys, b2, k, ae, d.bar_b2, kb);
    auto Rb = perm_lambda(sys, dw), Rbar = perm_lambda(sys, dwb);
    VarpiReport& r = d.report;
    int l_ae = perm_length(sys, ae), l_bae = perm_length(sys, d.bar_ae);
    r.a = perm_length(sys, perm_mul(d.bar_ae, dwb)) == l_bae + int(Rbar.size());
    r.b = perm_length(sys, perm_mul(ae, dw)) == l_ae + int(Rb.size());
    {
      auto sl = simple_in_lambda(sys, d.varpi);
      r.a_tilde = std::all_of(sl.begin(), sl.end(), [&](int j) { return j == 0 || j == kb; });
      auto sli = simple_in_lambda(sys, inverse(sys, d.varpi));
      r.b_tilde = std::all_of(sli.begin(), sli.end(), [&](int j) { return j == 0 || j == k; });
    }
    auto lam_set = [&](const SignedPerm& w) {
      auto l = perm_lambda(sys, w);
      return std::set<Vec>(l.begin(), l.end());
    };
    {
      auto lhs = lam_set(perm_mul(d.bar_ae, dwb));
      auto rhs = apply_all(dwb, perm_lambda(sys, d.bar_ae));
      rhs.insert(Rbar.begin(), Rbar.end());
      r.a1 = lhs == rhs && rhs.size() == Rbar.size() + size_t(l_bae);
      auto lhs2 = lam_set(perm_mul(ae, dw));
      auto rhs2 = apply_all(dw, perm_lambda(sys, ae));
      rhs2.insert(Rb.begin(), Rb.end());
      r.b1 = lhs2 == rhs2 && rhs2.size() == Rb.size() + size_t(l_ae);
    }
    auto sRbar = varsigma_set(sys, Rbar), sRb = varsigma_set(sys, Rb);
    r.a2 = includes(cancel_union(apply_all(ae, Rb), lam_set(perm_inv(ae))), sRbar);
    r.b2 = includes(cancel_union(apply_all(d.bar_ae, Rbar), lam_set(perm_inv(d.bar_ae))), sRb);
    r.alpha = perm_length(sys, perm_mul(dwb, perm_sigma(sys, ae))) == int(Rbar.size()) + l_ae;
    r.beta = perm_length(sys, perm_mul(dw, perm_sigma(sys, d.bar_ae))) == int(Rb.size()) + l_bae;
    r.a3 = includes(apply_all(ae, Rb), sRbar);
    r.b3 = includes(apply_all(d.bar_ae, Rbar), sRb);
    r.vth_b = vth(sys, b2, dw, ae);
    r.vth_bar = vth(sys, d.bar_b2, dwb, d.bar_ae);
    {
      SignedPerm ub = perm_mul(perm_mul(w0, d.bar_ae), dwb);
      r.inverse_identity = Element{d.bar_b2, perm_inv(ub)} == inverse(sys, d.varpi);
      Vec bb = canonical_weight2(sys, vneg(perm_apply(w0, perm_apply(d.bar_ae, d.bar_b2))));
      bool back = bb == b2 && almost_dominant(sys, bb, k);
      r.involutive = back && bar_of(sys, d.bar_b2, kb, d.bar_ae, b2, k) == ae;
    }
    const Vec& ak = simple[k - 1];
    d.beta = vneg(perm_apply(d.upsilon, ak));
    d.p = -inner_half(sys, ak, b2);
    r.p_zero = d.p == 0;
    AffineRoot bt{d.beta, d.p};
    r.endpoint_formula = -act(sys, inverse(sys, d.varpi), {ak, 0}) == bt;
    Vec g = vadd(simple[kb - 1], d.beta);
    if (is_root(sys, g)) {
      Triple t{bt, {g, d.p}, {simple[kb - 1], 0}};
      if (is_triple(sys, t)) d.triple = t;
    }
    if (!have || (!best.report.valid() && r.valid())) {
      best = d;
      have = true;
    }
    if (r.valid()) break;
  }
  return best;
}

VarpiData build_varpi(const System& sys, const Vec& b2, int k, const SignedPerm& ae, int bar_k) {
  VarpiData d = analyze_varpi(sys, b2, k, ae, bar_k);
  if (!d.report.valid()) throw ConditionsFailed(d.report.failed());
  return d;
}

bool check_siupsb(const System& sys, const Vec& b2, int k, const SignedPerm& ae, int bar_k) {
  VarpiData d = analyze_varpi(sys, b2, k, ae, bar_k);
  auto simple = simple_roots(sys);
  auto verts = [&](const Vec& b, int kk) {
    std::set<Vec> s;
    for (int j : gamma_b(sys, b, kk).dot_vertices) s.insert(simple[j - 1]);
    return s;
  };
  std::set<Vec> lhs;
  for (auto& x : verts(d.b2, k)) lhs.insert(perm_apply(ae, x));
  std::set<Vec> rhs;
  for (auto& x : verts(d.bar_b2, d.bar_k)) rhs.insert(varsigma(sys, x));
  bool holds = lhs == rhs &&
               perm_apply(ae, simple[k - 1]) == varsigma(sys, simple[d.bar_k - 1]);
  if (holds) {
    if (d.bar_ae != perm_inv(perm_sigma(sys, ae)))
      throw std::logic_error("bar ae differs from (ae^varsigma)^-1");
    if (!is_positive_vec(d.beta)) throw std::logic_error("beta is not positive");
    if (!d.report.a3 || !d.report.b3) throw std::logic_error("inclusions fail");
  }
  return holds;
}

Element vthpib_family(const System& sys, int i, int m, const std::vector<int>& c) {
  Vec b2 = vscale(fundamental_weight2(sys, i), -m);
  for (int r = 1; r <= sys.rank; ++r)
    if (r != i && c.at(r - 1)) b2 = vadd(b2, vscale(fundamental_weight2(sys, r), c[r - 1]));
  return pi_decompose(sys, canonical_weight2(sys, b2)).pi;
}

Element subsys_extend(const System& sys, const std::vector<int>& sub, const Vec& bp2_in,
                      const Vec& b2_in) {
  Vec bp2 = canonical_weight2(sys, bp2_in), b2 = canonical_weight2(sys, b2_in);
  auto simple = simple_roots(sys);
  std::vector<std::string> failed;
  // k' from b' restricted to the subdiagram
  int kp = 0;
  for (int pass = 0; pass < 2 && !kp; ++pass)
    for (int j : sub) {
      bool ok = true;
      for (int i : sub) {
        int s = pair_sign(sys, bp2, i);
        if (i == j ? s > 0 : s < 0) ok = false;
      }
      if (ok && (pass == 1 || pair_sign(sys, bp2, j) < 0)) {
        kp = j;
        break;
      }
    }
  if (!kp) throw ConditionsFailed({"b' almost dominant on the subdiagram"});
  std::vector<int> dot;
  for (int j : sub)
    if (j != kp && pair_sign(sys, bp2, j) == 0) dot.push_back(j);
  SignedPerm ups = perm_mul(parabolic_longest(sys, sub), parabolic_longest(sys, dot));
  Vec bar = canonical_weight2(sys, vneg(perm_apply(ups, b2)));
  if (!in_weight_lattice2(sys, bp2)) failed.push_back("b' in P");
  if (!almost_dominant(sys, b2, kp)) failed.push_back("b almost dominant");
  if (almost_dominant_indices(sys, bar).empty()) failed.push_back("bar b almost dominant");
  Vec diff = vsub(b2, bp2);
  for (int j : sub)
    if (pair_coroot(sys, diff, simple[j - 1]) != 0) {
      failed.push_back("b - b' supported off the subdiagram");
      break;
    }
  bool linked = false;
  for (int j : sub) linked |= inner(sys, theta_short(sys), simple[j - 1]) != 0;
  if ((b2 != bp2 || linked) && !(theta_pair(sys, b2) <= 0 && theta_pair(sys, bar) <= 0))
    failed.push_back("theta");
  if (!failed.empty()) throw ConditionsFailed(failed);
  Element e{b2, perm_inv(ups)};
  if (!is_minimal_ngt(sys, e)) throw ConditionsFailed({"postcondition: minimal NGT"});
  return e;
}

NonaffineResult nonaffine_from_affine(const System& sys, const VarpiData& v) {
  if (!is_positive_vec(v.beta)) throw BetaNegative("beta is negative");
  NonaffineResult res;
  SignedPerm u = decompose(sys, v.varpi).u;
  Element ue = from_perm(sys, u), ui = inverse(sys, ue);
  SignedPerm aes_inv = perm_inv(perm_sigma(sys, v.ae));
  for (int j : simple_in_lambda(sys, ui)) {
    AffineRoot end = -act(sys, ui, simple_affine_root(sys, j));
    if (!is_positive_vec(perm_apply(aes_inv, end.a)))
      res.diagnostics.push_back("end " + root_str(end) + " fails the lifting condition");
  }
  auto t = is_minimal_ngt(sys, ue);
  if (!t) {
    res.diagnostics.push_back("u is not a minimal NGT");
  } else {
    Vec g = vadd(simple_roots(sys)[v.bar_k - 1], v.beta);
    Triple want{{v.beta, 0}, {g, 0}, {simple_roots(sys)[v.bar_k - 1], 0}};
    if (!(*t == want)) res.diagnostics.push_back("triple differs from {beta, gamma, alpha_bar_k}");
  }
  if (res.diagnostics.empty()) res.u = u;
  return res;
}

std::vector<Vec> weight_box(const System& sys, int bound) {
  std::vector<Vec> out;
  const int d = sys.dim();
  const int free = sys.family == Family::A ? d - 1 : d;
  Vec v(d, 0);
  std::vector<int> idx(free, -2 * bound);
  while (true) {
    for (int i = 0; i < free; ++i) v[i] = idx[i];
    if (in_weight_lattice2(sys, v)) out.push_back(v);
    int i = 0;
    while (i < free && ++idx[i] > 2 * bound) idx[i++] = -2 * bound;
    if (i == free) break;
  }
  return out;
}

std::vector<SignedPerm> finite_weyl(const System& sys, int max_len) {
  auto simple = simple_roots(sys);
  std::vector<SignedPerm> out{perm_identity(sys.dim())};
  std::set<SignedPerm> seen(out.begin(), out.end());
  size_t level_begin = 0;
  for (int len = 0; max_len < 0 || len < max_len; ++len) {
    size_t level_end = out.size();
    if (level_begin == level_end) break;
    for (size_t h = level_begin; h < level_end; ++h)
      for (auto& a : simple) {
        SignedPerm y = perm_mul(out[h], perm_reflection(sys, a));
        if (seen.insert(y).second) out.push_back(y);
      }
    level_begin = level_end;
  }
  return out;
}

}  // namespace wngt
