#include "wngt/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

namespace wngt {

bool length_rule(const System& sys, const Triple& t) {
  int a = nu(sys, t.alpha.a), b = nu(sys, t.beta.a), g = nu(sys, t.gamma.a);
  switch (sys.family) {
    case Family::B: return a == 2 && b == 2 && g == 2;
    case Family::C: return a == 1 && b == 1 && g == 1;
    default: return true;
  }
}

bool is_triple(const System& sys, const Triple& t) {
  return t.alpha + t.beta == t.gamma && is_affine_root(sys, t.alpha) &&
         is_affine_root(sys, t.beta) && is_affine_root(sys, t.gamma) && is_positive(t.alpha) &&
         is_positive(t.beta) && is_positive(t.gamma) && length_rule(sys, t);
}

int coxeter_m(const System& sys, int i, int j) {
  if (i == j) return 1;
  Vec a = simple_affine_root(sys, i).a, b = simple_affine_root(sys, j).a;
  int ab = inner(sys, a, b);
  int r = 4 * ab * ab / (inner(sys, a, a) * inner(sys, b, b));
  static const int table[] = {2, 3, 4, 6, 0};
  return table[r];
}

namespace {

using MTable = std::vector<std::vector<int>>;

MTable mtable(const System& sys) {
  MTable mt(sys.rank + 1, std::vector<int>(sys.rank + 1));
  for (int i = 0; i <= sys.rank; ++i)
    for (int j = 0; j <= sys.rank; ++j) mt[i][j] = coxeter_m(sys, i, j);
  return mt;
}

// Calls f(p, m) for every move block [p, p+m) inside [lo, hi].
template <class F>
void for_each_move(const MTable& mt, const std::vector<int>& w, int lo, int hi, F&& f) {
  for (int p = std::max(lo, 0); p + 1 <= hi && p + 1 < (int)w.size(); ++p) {
    int i = w[p], j = w[p + 1];
    if (i == j) continue;
    int m = mt[i][j];
    if (m == 0 || p + m - 1 > hi || p + m > (int)w.size()) continue;
    bool ok = true;
    for (int t = 2; t < m && ok; ++t) ok = w[p + t] == (t % 2 ? j : i);
    if (ok) f(p, m);
  }
}

void apply_move(std::vector<int>& w, int p, int m) {
  int i = w[p], j = w[p + 1];
  for (int t = 0; t < m; ++t) w[p + t] = (t % 2 ? i : j);
}

int moved(int q, int p, int m) { return (q >= p && q < p + m) ? 2 * p + m - 1 - q : q; }

struct WordHash {
  size_t operator()(const std::vector<int>& w) const {
    size_t h = 1469598103934665603ull;
    for (int c : w) h = (h ^ size_t(c + 1)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

std::vector<Neighbor> coxeter_neighbors_in(const System& sys, const std::vector<int>& word,
                                           int lo, int hi) {
  std::vector<Neighbor> out;
  for_each_move(mtable(sys), word, lo, hi, [&](int p, int m) {
    Neighbor nb{word, {p, m}};
    apply_move(nb.word, p, m);
    out.push_back(std::move(nb));
  });
  return out;
}

std::vector<Neighbor> coxeter_neighbors(const System& sys, const std::vector<int>& word) {
  lambda_sequence(sys, word);  // throws NonReduced
  return coxeter_neighbors_in(sys, word, 0, int(word.size()) - 1);
}

size_t default_cap() {
  if (const char* s = std::getenv("WNGT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && v > 0) return size_t(v);
  }
  return 1000000;
}

std::vector<std::vector<int>> all_reduced_words_from(const System& sys,
                                                     const std::vector<int>& word, size_t cap) {
  lambda_sequence(sys, word);
  MTable mt = mtable(sys);
  std::vector<std::vector<int>> out{word};
  std::unordered_map<std::vector<int>, int, WordHash> seen{{word, 0}};
  for (size_t h = 0; h < out.size(); ++h) {
    std::vector<int> cur = out[h];
    for_each_move(mt, cur, 0, int(cur.size()) - 1, [&](int p, int m) {
      std::vector<int> nw = cur;
      apply_move(nw, p, m);
      if (seen.emplace(nw, int(out.size())).second) {
        if (out.size() >= cap) throw CapExceeded("reduced-word enumeration exceeded cap");
        out.push_back(std::move(nw));
      }
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> all_reduced_words(const System& sys, const Element& e, size_t cap) {
  return all_reduced_words_from(sys, reduced_word(sys, e), cap);
}

GatherResult is_gatherable(const System& sys, const std::vector<int>& word, const Triple& t,
                           const GatherOptions& opt) {
  auto seq = lambda_sequence(sys, word);
  auto find = [&](const AffineRoot& r) {
    auto it = std::find(seq.begin(), seq.end(), r);
    if (it == seq.end()) throw TripleAbsent("root " + root_str(r) + " not in lambda");
    return int(it - seq.begin());
  };
  int pa = find(t.alpha), pb = find(t.beta), pg = find(t.gamma);
  const int lo0 = std::min(pa, pb), hi0 = std::max(pa, pb);
  std::vector<int> sub(word.begin() + lo0, word.begin() + hi0 + 1);
  MTable mt = mtable(sys);

  struct Node {
    std::vector<int> w;
    int pa, pb, pg, parent;
    Move mv;
  };
  std::vector<Node> nodes{{sub, pa - lo0, pb - lo0, pg - lo0, -1, {}}};
  std::unordered_map<std::vector<int>, int, WordHash> seen{{sub, 0}};
  GatherResult res;
  auto done = [](const Node& n) {
    return std::max({n.pa, n.pb, n.pg}) - std::min({n.pa, n.pb, n.pg}) == 2;
  };
  int hit = done(nodes[0]) ? 0 : -1;
  for (size_t h = 0; h < nodes.size() && hit < 0; ++h) {
    const Node cur = nodes[h];
    int lo = opt.frozen_segment ? 0 : std::min(cur.pa, cur.pb);
    int hi = opt.frozen_segment ? int(sub.size()) - 1 : std::max(cur.pa, cur.pb);
    for_each_move(mt, cur.w, lo, hi, [&](int p, int m) {
      if (hit >= 0) return;
      std::vector<int> nw = cur.w;
      apply_move(nw, p, m);
      if (!seen.emplace(nw, int(nodes.size())).second) return;
      nodes.push_back({std::move(nw), moved(cur.pa, p, m), moved(cur.pb, p, m),
                       moved(cur.pg, p, m), int(h), {p + lo0, m}});
      if (done(nodes.back())) hit = int(nodes.size()) - 1;
    });
    if (hit < 0 && nodes.size() > opt.cap) {
      res.outcome = GatherOutcome::CapExceeded;
      res.states = nodes.size();
      return res;
    }
  }
  res.states = nodes.size();
  if (hit < 0) {
    res.outcome = GatherOutcome::NonGatherable;
    return res;
  }
  res.outcome = GatherOutcome::Gatherable;
  for (int j = hit; nodes[j].parent >= 0; j = nodes[j].parent) res.witness.push_back(nodes[j].mv);
  std::reverse(res.witness.begin(), res.witness.end());
  res.witness_word = word;
  std::copy(nodes[hit].w.begin(), nodes[hit].w.end(), res.witness_word.begin() + lo0);
  return res;
}

std::vector<Triple> triples_in(const System& sys, const std::vector<int>& word) {
  auto seq = lambda_sequence(sys, word);
  std::set<AffineRoot> in(seq.begin(), seq.end());
  std::vector<Triple> out;
  for (size_t x = 0; x < seq.size(); ++x)
    for (size_t y = x + 1; y < seq.size(); ++y) {
      Triple t{seq[y], seq[x] + seq[y], seq[x]};
      if (in.count(t.gamma) && is_affine_root(sys, t.gamma) && length_rule(sys, t))
        out.push_back(t);
    }
  return out;
}

std::vector<int> simple_in_lambda(const System& sys, const Element& e) {
  std::vector<int> out;
  for (int i = 0; i <= sys.rank; ++i)
    if (!is_positive(act(sys, e, simple_affine_root(sys, i)))) out.push_back(i);
  return out;
}

Endpoints nonmovable_endpoints(const System& sys, const Element& e) {
  Endpoints ep;
  auto f = simple_in_lambda(sys, e);
  if (f.size() == 1) ep.first = simple_affine_root(sys, f[0]);
  Element ei = inverse(sys, e);
  auto l = simple_in_lambda(sys, ei);
  if (l.size() == 1) ep.last = -act(sys, ei, simple_affine_root(sys, l[0]));
  return ep;
}

std::optional<Triple> is_minimal_ngt(const System& sys, const Element& e) {
  // With both ends pinned, a length-3 triple is already gathered.
  if (length(sys, e) < 4) return std::nullopt;
  auto ep = nonmovable_endpoints(sys, e);
  if (!ep.first || !ep.last) return std::nullopt;
  Triple t{*ep.last, *ep.first + *ep.last, *ep.first};
  if (!is_affine_root(sys, t.gamma) || !is_positive(t.gamma) || !length_rule(sys, t))
    return std::nullopt;
  if (is_positive(act(sys, e, t.gamma))) return std::nullopt;
  return t;
}

// ---------------- subsystem test ----------------

namespace {

struct Frac {
  long long n = 0, d = 1;
  Frac() = default;
  Frac(long long a, long long b = 1) : n(a), d(b) { norm(); }
  void norm() {
    if (d < 0) n = -n, d = -d;
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) n /= g, d /= g;
  }
  bool zero() const { return n == 0; }
};
Frac operator-(Frac a, Frac b) { return Frac(a.n * b.d - b.n * a.d, a.d * b.d); }
Frac operator*(Frac a, Frac b) { return Frac(a.n * b.n, a.d * b.d); }
Frac operator/(Frac a, Frac b) { return Frac(a.n * b.d, a.d * b.n); }

using Row = std::vector<Frac>;

struct Span {
  std::vector<Row> rows;
  std::vector<int> piv;

  void add(const AffineRoot& r) {
    Row v;
    for (int c : r.a) v.emplace_back(c);
    v.emplace_back(r.k);
    reduce(v);
    int p = -1;
    for (size_t c = 0; c < v.size(); ++c)
      if (!v[c].zero()) { p = int(c); break; }
    if (p < 0) return;
    Frac inv = Frac(1) / v[p];
    for (auto& x : v) x = x * inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      Frac f = rows[i][p];
      if (f.zero()) continue;
      for (size_t c = 0; c < v.size(); ++c) rows[i][c] = rows[i][c] - f * v[c];
    }
    rows.push_back(v);
    piv.push_back(p);
  }
  void reduce(Row& v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
      Frac f = v[piv[i]];
      if (f.zero()) continue;
      for (size_t c = 0; c < v.size(); ++c) v[c] = v[c] - f * rows[i][c];
    }
  }
  int rank() const { return int(rows.size()); }
  bool has_delta(int dim) const {
    for (int p : piv)
      if (p == dim) return true;
    return false;
  }
  // Level k with [a, k] in the span, if a lies in the projection.
  std::optional<Frac> level_of(const Vec& a) const {
    Row v;
    for (int c : a) v.emplace_back(c);
    v.emplace_back(0);
    reduce(v);
    for (size_t c = 0; c + 1 < v.size(); ++c)
      if (!v[c].zero()) return std::nullopt;
    return Frac(-v.back().n, v.back().d);
  }
};

struct SubType {
  System X;
  std::vector<Vec> pos;                 // positive roots of X
  std::vector<std::vector<int>> coeff;  // in simple-root coordinates
  std::vector<std::vector<int>> cartan;
};

SubType make_subtype(Family f, int r) {
  SubType st{make_system(f, r), {}, {}, {}};
  auto simple = simple_roots(st.X);
  for (int i = 0; i < r; ++i) {
    st.pos.push_back(simple[i]);
    std::vector<int> c(r, 0);
    c[i] = 1;
    st.coeff.push_back(c);
  }
  for (size_t h = 0; h < st.pos.size(); ++h)
    for (int i = 0; i < r; ++i) {
      Vec v = vadd(st.pos[h], simple[i]);
      if (!is_root(st.X, v) || std::find(st.pos.begin(), st.pos.end(), v) != st.pos.end()) continue;
      auto c = st.coeff[h];
      c[i]++;
      st.pos.push_back(v);
      st.coeff.push_back(c);
    }
  st.cartan.assign(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) st.cartan[i][j] = pair_coroot(st.X, simple[i], simple[j]);
  return st;
}

const std::vector<SubType>& subtypes() {
  static const std::vector<SubType> v{make_subtype(Family::B, 3), make_subtype(Family::C, 3),
                                      make_subtype(Family::D, 4)};
  return v;
}

// Non-gatherability of the triple (positive-root indices) in a word of a subtype.
bool subtype_nongatherable(int type, const std::vector<int>& word, int ia, int ib) {
  static std::mutex mu;
  static std::map<std::tuple<int, std::vector<int>, int, int>, bool> memo;
  auto key = std::make_tuple(type, word, ia, ib);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const SubType& st = subtypes()[type];
  AffineRoot a{st.pos[ia], 0}, b{st.pos[ib], 0};
  bool ng = is_gatherable(st.X, word, Triple{b, a + b, a}).outcome == GatherOutcome::NonGatherable;
  std::lock_guard<std::mutex> lk(mu);
  memo[key] = ng;
  return ng;
}

// True when the span of gens cuts out a B3/C3/D4 subsystem in which the
// restriction of seq carries the triple non-gatherably.
bool witness_in_span(const System& sys, const std::vector<AffineRoot>& gens,
                     const std::vector<AffineRoot>& seq, const Triple& t) {
  Span sp;
  for (auto& g : gens) sp.add(g);
  int r = sp.rank();
  if (r != 3 && r != 4) return false;
  if (sp.has_delta(sys.dim())) return false;
  std::vector<AffineRoot> pos;
  size_t total = 0;
  for (auto& a : all_roots(sys)) {
    auto k = sp.level_of(a);
    if (!k || k->d != 1 || k->n % nu(sys, a) != 0) continue;
    AffineRoot ar{a, int(k->n)};
    ++total;
    if (is_positive(ar)) pos.push_back(ar);
  }
  int type = -1;
  if (r == 3 && total == 18) {
    int longs = 0;
    for (auto& p : pos) longs += nu(sys, p.a) == 2;
    type = longs == 6 ? 0 : (longs == 3 ? 1 : -1);
  } else if (r == 4 && total == 24) {
    type = 2;
  }
  if (type < 0) return false;
  std::set<AffineRoot> pset(pos.begin(), pos.end());
  std::vector<AffineRoot> simple;
  for (auto& p : pos) {
    bool dec = false;
    for (auto& q : pos)
      if (q != p && pset.count(p - q)) { dec = true; break; }
    if (!dec) simple.push_back(p);
  }
  const SubType& st = subtypes()[type];
  if ((int)simple.size() != r) return false;
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int i = 0; i < r && match; ++i)
      for (int j = 0; j < r && match; ++j)
        match = pair_coroot(sys, simple[perm[i]].a, simple[perm[j]].a) == st.cartan[i][j];
    if (!match) continue;
    std::map<AffineRoot, int> pre;  // image -> index in st.pos
    for (size_t q = 0; q < st.pos.size(); ++q) {
      AffineRoot img{Vec(sys.dim(), 0), 0};
      for (int i = 0; i < r; ++i)
        for (int c = 0; c < st.coeff[q][i]; ++c) img = img + simple[perm[i]];
      pre[img] = int(q);
    }
    std::vector<AffineRoot> sub;
    for (auto& x : seq)
      if (auto it = pre.find(x); it != pre.end()) sub.push_back({st.pos[it->second], 0});
    auto ia = pre.find(t.alpha), ib = pre.find(t.beta);
    if (ia == pre.end() || ib == pre.end()) return false;
    std::vector<int> xword;
    try {
      xword = word_from_lambda(st.X, sub);
    } catch (const InvalidSequence&) {
      return false;
    }
    return subtype_nongatherable(type, xword, ia->second, ib->second);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

bool admissible(const System& sys, const std::vector<int>& word, const Triple& t) {
  if (sys.rank < 3) throw RankTooSmall("admissibility needs rank >= 3");
  auto seq = lambda_sequence(sys, word);
  auto find = [&](const AffineRoot& r) {
    auto it = std::find(seq.begin(), seq.end(), r);
    if (it == seq.end()) throw TripleAbsent("root " + root_str(r) + " not in lambda");
    return int(it - seq.begin());
  };
  int pa = find(t.alpha), pb = find(t.beta);
  find(t.gamma);
  int lo = std::min(pa, pb), hi = std::max(pa, pb);
  // Cut to the segment and move its first root to a simple one.
  std::vector<int> prefix(word.begin(), word.begin() + lo);
  std::vector<int> seg(word.begin() + lo, word.begin() + hi + 1);
  Element xi = from_word(sys, prefix);  // x^-1 with x = s_{g0}..s_{g(lo-1)}
  auto sseq = lambda_sequence(sys, seg);
  Triple st{act(sys, xi, t.beta), act(sys, xi, t.gamma), act(sys, xi, t.alpha)};
  std::vector<AffineRoot> extra;
  for (auto& r : sseq)
    if (r != st.alpha && r != st.beta && r != st.gamma) extra.push_back(r);
  for (size_t x = 0; x < extra.size(); ++x) {
    if (witness_in_span(sys, {st.alpha, st.beta, extra[x]}, sseq, st)) return false;
    for (size_t y = x + 1; y < extra.size(); ++y)
      if (witness_in_span(sys, {st.alpha, st.beta, extra[x], extra[y]}, sseq, st)) return false;
  }
  return true;
}

bool admissible(const System& sys, const Element& e, const Triple& t) {
  return admissible(sys, reduced_word(sys, e), t);
}

}  // namespace wngt
