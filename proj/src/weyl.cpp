#include "wngt/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wngt {

AffineRoot operator+(const AffineRoot& x, const AffineRoot& y) {
  return {vadd(x.a, y.a), x.k + y.k};
}
AffineRoot operator-(const AffineRoot& x, const AffineRoot& y) {
  return {vsub(x.a, y.a), x.k - y.k};
}
AffineRoot operator-(const AffineRoot& x) { return {vneg(x.a), -x.k}; }

std::string root_str(const AffineRoot& r) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < r.a.size(); ++i) os << (i ? "," : "") << r.a[i];
  os << '@' << r.k << ']';
  return os.str();
}

bool is_affine_root(const System& sys, const AffineRoot& r) {
  if (!is_root(sys, r.a)) return false;
  return r.k % nu(sys, r.a) == 0;
}

bool is_positive(const AffineRoot& r) {
  return r.k > 0 || (r.k == 0 && is_positive_vec(r.a));
}

AffineRoot simple_affine_root(const System& sys, int i) {
  if (i < 0 || i > sys.rank) throw std::out_of_range("generator index");
  if (i == 0) return {vneg(theta_short(sys)), 1};
  return {simple_roots(sys)[i - 1], 0};
}

int simple_index(const System& sys, const AffineRoot& r) {
  for (int i = 0; i <= sys.rank; ++i)
    if (simple_affine_root(sys, i) == r) return i;
  return -1;
}

// ---- signed permutations ----

SignedPerm perm_identity(int dim) {
  SignedPerm w;
  for (int i = 1; i <= dim; ++i) w.s.push_back(i);
  return w;
}

Vec perm_apply(const SignedPerm& w, const Vec& x) {
  Vec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    int s = w.s[i];
    out[i] = s > 0 ? x[s - 1] : -x[-s - 1];
  }
  return out;
}

SignedPerm perm_mul(const SignedPerm& a, const SignedPerm& b) {
  SignedPerm p;
  p.s.resize(a.s.size());
  for (size_t i = 0; i < a.s.size(); ++i) {
    int s = a.s[i];
    p.s[i] = s > 0 ? b.s[s - 1] : -b.s[-s - 1];
  }
  return p;
}

SignedPerm perm_inv(const SignedPerm& w) {
  SignedPerm p;
  p.s.resize(w.s.size());
  for (size_t i = 0; i < w.s.size(); ++i) {
    int s = w.s[i];
    int j = s > 0 ? s : -s;
    p.s[j - 1] = s > 0 ? int(i + 1) : -int(i + 1);
  }
  return p;
}

SignedPerm perm_reflection(const System& sys, const Vec& root) {
  Vec x(sys.dim());
  for (int i = 0; i < sys.dim(); ++i) x[i] = i + 1;
  return SignedPerm{reflect(sys, root, x)};
}

bool perm_in_group(const System& sys, const SignedPerm& w) {
  if ((int)w.s.size() != sys.dim()) return false;
  std::vector<bool> seen(w.s.size() + 1, false);
  int neg = 0;
  for (int s : w.s) {
    int j = s > 0 ? s : -s;
    if (j < 1 || j > (int)w.s.size() || seen[j]) return false;
    seen[j] = true;
    if (s < 0) ++neg;
  }
  if (sys.family == Family::A) return neg == 0;
  if (sys.family == Family::D) return neg % 2 == 0;
  return true;
}

std::vector<Vec> perm_lambda(const System& sys, const SignedPerm& w) {
  std::vector<Vec> out;
  for (auto& a : positive_roots(sys))
    if (!is_positive_vec(perm_apply(w, a))) out.push_back(a);
  return out;
}

int perm_length(const System& sys, const SignedPerm& w) {
  int n = 0;
  for (auto& a : positive_roots(sys))
    if (!is_positive_vec(perm_apply(w, a))) ++n;
  return n;
}

SignedPerm parabolic_longest(const System& sys, const std::vector<int>& J) {
  auto simple = simple_roots(sys);
  SignedPerm w = perm_identity(sys.dim());
  for (bool grew = true; grew;) {
    grew = false;
    for (int j : J) {
      if (is_positive_vec(perm_apply(w, simple[j - 1]))) {
        w = perm_mul(w, perm_reflection(sys, simple[j - 1]));
        grew = true;
      }
    }
  }
  return w;
}

SignedPerm longest_element(const System& sys) {
  std::vector<int> all;
  for (int i = 1; i <= sys.rank; ++i) all.push_back(i);
  return parabolic_longest(sys, all);
}

SignedPerm perm_sigma(const System& sys, const SignedPerm& w) {
  auto w0 = longest_element(sys);
  return perm_mul(perm_mul(w0, w), w0);
}

std::vector<int> perm_word(const System& sys, const SignedPerm& w) {
  auto simple = simple_roots(sys);
  std::vector<int> word;
  SignedPerm x = w;
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i <= sys.rank; ++i) {
      if (!is_positive_vec(perm_apply(x, simple[i - 1]))) {
        word.push_back(i);
        x = perm_mul(x, perm_reflection(sys, simple[i - 1]));
        found = true;
        break;
      }
    }
  }
  return word;
}

std::string perm_str(const SignedPerm& w) { return vec_str(w.s); }

// ---- elements ----

size_t ElementHash::operator()(const Element& e) const {
  size_t h = 1469598103934665603ull;
  auto mix = [&](int v) { h = (h ^ size_t(uint32_t(v))) * 1099511628211ull; };
  for (int c : e.b2) mix(c);
  for (int c : e.w.s) mix(c);
  return h;
}

Element identity(const System& sys) {
  return {Vec(sys.dim(), 0), perm_identity(sys.dim())};
}

Element translation2(const System& sys, const Vec& b2) {
  return {canonical_weight2(sys, b2), perm_identity(sys.dim())};
}

Element from_perm(const System& sys, const SignedPerm& w) { return {Vec(sys.dim(), 0), w}; }

Element affine_reflection(const System& sys, const AffineRoot& r) {
  int v = nu(sys, r.a);
  // -k a^vee, doubled: -2 (k / nu) a
  Vec b2 = vscale(r.a, -2 * (r.k / v));
  return {canonical_weight2(sys, b2), perm_reflection(sys, r.a)};
}

Element simple_reflection(const System& sys, int i) {
  if (i < 0 || i > sys.rank) throw IndexOutOfRange("generator " + std::to_string(i));
  return affine_reflection(sys, simple_affine_root(sys, i));
}

Element multiply(const System& sys, const Element& x, const Element& y) {
  Element out{vadd(x.b2, perm_apply(x.w, y.b2)), perm_mul(x.w, y.w)};
  out.b2 = canonical_weight2(sys, std::move(out.b2));
  return out;
}

Element inverse(const System& sys, const Element& x) {
  SignedPerm wi = perm_inv(x.w);
  return {canonical_weight2(sys, vneg(perm_apply(wi, x.b2))), wi};
}

AffineRoot act(const System& sys, const Element& e, const AffineRoot& r) {
  Vec wa = perm_apply(e.w, r.a);
  int c = inner_half(sys, wa, e.b2);
  return {std::move(wa), r.k - c};
}

Vec translation_half(const Element& e) {
  Vec b(e.b2.size());
  for (size_t i = 0; i < b.size(); ++i) {
    if (e.b2[i] % 2) throw std::domain_error("half-integral translation");
    b[i] = e.b2[i] / 2;
  }
  return b;
}

std::string element_str(const Element& e) {
  std::ostringstream os;
  os << "b=(";
  for (size_t i = 0; i < e.b2.size(); ++i) {
    os << (i ? "," : "");
    if (e.b2[i] % 2 == 0) os << e.b2[i] / 2;
    else os << e.b2[i] << "/2";
  }
  os << ") w=" << perm_str(e.w);
  return os.str();
}

Element from_word(const System& sys, const std::vector<int>& word) {
  Element e = identity(sys);
  for (int g : word) e = multiply(sys, simple_reflection(sys, g), e);
  return e;
}

Element from_ext_word(const System& sys, const Word& word) {
  Element e = from_word(sys, word.g);
  if (word.pi == 0) return e;
  auto pis = pi_group(sys);
  if (word.pi < 0 || word.pi >= (int)pis.size()) throw IndexOutOfRange("pi index");
  return multiply(sys, pis[word.pi], e);
}

std::vector<AffineRoot> lambda_set(const System& sys, const Element& e) {
  std::vector<AffineRoot> out;
  for (auto& a : all_roots(sys)) {
    Vec wa = perm_apply(e.w, a);
    int c = inner_half(sys, wa, e.b2);
    int v = nu(sys, a);
    bool pos = is_positive_vec(a);
    bool wneg = !is_positive_vec(wa);
    for (int k = pos ? 0 : v; k < c || (k == c && wneg); k += v) out.push_back({a, k});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int length(const System& sys, const Element& e) {
  int n = 0;
  for (auto& a : all_roots(sys)) {
    Vec wa = perm_apply(e.w, a);
    int c = inner_half(sys, wa, e.b2);
    int v = nu(sys, a);
    int lo = is_positive_vec(a) ? 0 : v;
    int hi = (!is_positive_vec(wa)) ? c : c - 1;  // inclusive upper bound
    if (hi >= lo) n += (hi - lo) / v + 1;
  }
  return n;
}

std::vector<int> reduced_word(const System& sys, const Element& e) {
  std::vector<int> word;
  Element x = e;
  for (bool found = true; found;) {
    found = false;
    for (int i = 0; i <= sys.rank; ++i) {
      if (!is_positive(act(sys, x, simple_affine_root(sys, i)))) {
        word.push_back(i);
        x = multiply(sys, x, simple_reflection(sys, i));
        found = true;
        break;
      }
    }
  }
  if (!(x == identity(sys))) throw std::invalid_argument("element has a nontrivial pi part");
  return word;
}

std::vector<AffineRoot> lambda_sequence(const System& sys, const std::vector<int>& word) {
  std::vector<AffineRoot> seq;
  Element x = identity(sys);
  for (size_t p = 0; p < word.size(); ++p) {
    if (word[p] < 0 || word[p] > sys.rank)
      throw IndexOutOfRange("generator " + std::to_string(word[p]));
    AffineRoot r = act(sys, x, simple_affine_root(sys, word[p]));
    if (!is_positive(r)) throw NonReduced(int(p) + 1);
    seq.push_back(std::move(r));
    x = multiply(sys, x, simple_reflection(sys, word[p]));
  }
  return seq;
}

std::vector<int> word_from_lambda(const System& sys, const std::vector<AffineRoot>& seq) {
  std::vector<int> word;
  Element acc = identity(sys);
  for (size_t p = 0; p < seq.size(); ++p) {
    if (!is_affine_root(sys, seq[p]))
      throw InvalidSequence("entry " + std::to_string(p + 1) + " is not an affine root");
    int i = simple_index(sys, act(sys, acc, seq[p]));
    if (i < 0)
      throw InvalidSequence("entry " + std::to_string(p + 1) + " does not reduce to a simple root");
    word.push_back(i);
    acc = multiply(sys, acc, affine_reflection(sys, seq[p]));
  }
  try {
    if (lambda_sequence(sys, word) != seq) throw InvalidSequence("round trip mismatch");
  } catch (const NonReduced&) {
    throw InvalidSequence("recovered word is not reduced");
  }
  return word;
}

LambdaCheck validate_lambda(const System& sys, const std::vector<AffineRoot>& seq) {
  std::map<AffineRoot, int> pos;
  for (size_t p = 0; p < seq.size(); ++p) {
    if (!is_affine_root(sys, seq[p]) || !is_positive(seq[p]))
      return {false, "positivity", {seq[p]}};
    if (!pos.emplace(seq[p], int(p)).second) return {false, "distinct", {seq[p]}};
  }
  auto where = [&](const AffineRoot& r) {
    auto it = pos.find(r);
    return it == pos.end() ? -1 : it->second;
  };
  auto roots = all_roots(sys);

  // (i), both summands present: the sum is present and lies between them.
  for (size_t x = 0; x < seq.size(); ++x)
    for (size_t y = x + 1; y < seq.size(); ++y) {
      AffineRoot g = seq[x] + seq[y];
      if (!is_affine_root(sys, g) || !is_positive(g)) continue;
      int pg = where(g);
      if (pg < 0 || pg < int(x) || pg > int(y)) return {false, "i", {seq[x], seq[y], g}};
    }
  // (i), sum present with one summand absent: the other one precedes the sum.
  for (size_t q = 0; q < seq.size(); ++q) {
    const AffineRoot& g = seq[q];
    for (auto& a : roots) {
      int v = nu(sys, a);
      for (int k = 0; k <= g.k; k += v) {
        AffineRoot al{a, k};
        if (!is_positive(al) || where(al) >= 0) continue;
        AffineRoot be = g - al;
        if (!is_affine_root(sys, be) || !is_positive(be)) continue;
        int pb = where(be);
        if (pb < 0 || pb > int(q)) return {false, "i", {be, g, al}};
      }
    }
  }
  // (ii) level staircase with order; plus the set-level closure at level 0.
  for (size_t q = 0; q < seq.size(); ++q) {
    const AffineRoot& r = seq[q];
    int v = nu(sys, r.a);
    for (int k = r.k - v; k > 0; k -= v) {
      int p = where({r.a, k});
      if (p < 0 || p > int(q)) return {false, "ii", {{r.a, k}, r}};
    }
    if (r.k > 0 && is_positive_vec(r.a) && where({r.a, 0}) < 0)
      return {false, "ii", {{r.a, 0}, r}};
  }
  // (iii)
  for (size_t q = 0; q < seq.size(); ++q) {
    const AffineRoot& be = seq[q];
    for (auto& a : positive_roots(sys)) {
      int v = nu(sys, a);
      for (int k = 0; be.k - k > 0; k += v) {
        // only subtrahends outside the set constrain the difference
        if (where({a, k}) >= 0) continue;
        AffineRoot g{vsub(be.a, a), be.k - k};
        if (is_positive_vec(g.a) || is_zero(g.a) || !is_affine_root(sys, g)) continue;
        int pg = where(g);
        if (pg < 0 || pg > int(q)) return {false, "iii", {be, g}};
      }
    }
  }
  return {};
}

PiDecomposition decompose(const System& sys, const Element& e) {
  Element x = e;
  SignedPerm u = perm_identity(sys.dim());
  auto simple = simple_roots(sys);
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i <= sys.rank; ++i) {
      if (!is_positive(act(sys, x, {simple[i - 1], 0}))) {
        SignedPerm s = perm_reflection(sys, simple[i - 1]);
        x = multiply(sys, x, from_perm(sys, s));
        u = perm_mul(s, u);
        found = true;
        break;
      }
    }
  }
  return {x, u};
}

PiDecomposition pi_decompose(const System& sys, const Vec& b2) {
  return decompose(sys, translation2(sys, b2));
}

std::vector<Element> pi_group(const System& sys) {
  std::vector<Element> out{identity(sys)};
  for (int i = 1; i <= sys.rank; ++i) {
    Element p = pi_decompose(sys, fundamental_weight2(sys, i)).pi;
    if (length(sys, p) != 0) continue;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

int pi_index(const System& sys, const Element& e) {
  auto g = pi_group(sys);
  auto it = std::find(g.begin(), g.end(), e);
  return it == g.end() ? -1 : int(it - g.begin());
}

std::vector<int> pi_index_permutation(const System& sys, const Element& pi) {
  std::vector<int> perm;
  for (int i = 0; i <= sys.rank; ++i) perm.push_back(simple_index(sys, act(sys, pi, simple_affine_root(sys, i))));
  return perm;
}

}  // namespace wngt
