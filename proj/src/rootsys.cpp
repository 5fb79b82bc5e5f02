#include "wngt/rootsys.hpp"

#include <cassert>
#include <sstream>

namespace wngt {

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
  }
  throw InvalidSystem(std::string("unknown family '") + c + "'");
}

std::string System::name() const {
  return std::string(1, family_char(family)) + std::to_string(rank);
}

System make_system(Family f, int rank) {
  int lo = 1;
  if (f == Family::B || f == Family::C) lo = 2;
  if (f == Family::D) lo = 3;
  if (rank < lo || rank > 9)
    throw InvalidSystem("rank " + std::to_string(rank) + " out of range for " +
                        std::string(1, family_char(f)));
  return System{f, rank};
}

static Vec unit(int dim, int i, int c = 1) {
  Vec v(dim, 0);
  v[i] = c;
  return v;
}

std::vector<Vec> simple_roots(const System& sys) {
  const int n = sys.rank, d = sys.dim();
  std::vector<Vec> out;
  for (int i = 0; i + 1 < n; ++i) {
    Vec v(d, 0);
    v[i] = 1;
    v[i + 1] = -1;
    out.push_back(v);
  }
  switch (sys.family) {
    case Family::A: {
      Vec v(d, 0);
      v[n - 1] = 1;
      v[n] = -1;
      out.push_back(v);
      break;
    }
    case Family::B: out.push_back(unit(d, n - 1)); break;
    case Family::C: out.push_back(unit(d, n - 1, 2)); break;
    case Family::D: {
      Vec v(d, 0);
      v[n - 2] = 1;
      v[n - 1] = 1;
      out.push_back(v);
      break;
    }
  }
  return out;
}

Vec theta_short(const System& sys) {
  const int d = sys.dim();
  Vec v(d, 0);
  v[0] = 1;
  switch (sys.family) {
    case Family::A: v[d - 1] = -1; break;
    case Family::B: break;
    case Family::C:
    case Family::D: v[1] = 1; break;
  }
  return v;
}

int inner(const System& sys, const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  int s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s * sys.form_scale();
}

int inner_half(const System& sys, const Vec& x, const Vec& b2) {
  int s = inner(sys, x, b2);
  assert(s % 2 == 0);
  return s / 2;
}

int nu(const System& sys, const Vec& r) { return inner(sys, r, r) / 2; }

int pair_coroot(const System& sys, const Vec& x, const Vec& r) {
  int num = 2 * inner(sys, x, r), den = inner(sys, r, r);
  assert(den != 0 && num % den == 0);
  return num / den;
}

Vec reflect(const System& sys, const Vec& mirror, const Vec& x) {
  if (!is_root(sys, mirror)) throw std::invalid_argument("mirror is not a root");
  int c = pair_coroot(sys, x, mirror);
  Vec out = x;
  for (size_t i = 0; i < out.size(); ++i) out[i] -= c * mirror[i];
  return out;
}

bool is_positive_vec(const Vec& v) {
  for (int c : v)
    if (c != 0) return c > 0;
  return false;
}

bool is_root(const System& sys, const Vec& v) {
  if ((int)v.size() != sys.dim()) return false;
  int nz = 0, abs_sum = 0, maxabs = 0, sum = 0;
  for (int c : v) {
    if (c != 0) ++nz;
    abs_sum += c < 0 ? -c : c;
    maxabs = std::max(maxabs, c < 0 ? -c : c);
    sum += c;
  }
  switch (sys.family) {
    case Family::A: return nz == 2 && maxabs == 1 && sum == 0;
    case Family::B: return maxabs == 1 && (nz == 1 || nz == 2);
    case Family::C: return (nz == 2 && maxabs == 1) || (nz == 1 && maxabs == 2);
    case Family::D: return nz == 2 && maxabs == 1;
  }
  return false;
}

std::vector<Vec> positive_roots(const System& sys) {
  const int d = sys.dim();
  std::vector<Vec> out;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Vec v(d, 0);
      v[i] = 1;
      v[j] = -1;
      out.push_back(v);
      if (sys.family != Family::A) {
        v[j] = 1;
        out.push_back(v);
      }
    }
    if (sys.family == Family::B) out.push_back(unit(d, i));
    if (sys.family == Family::C) out.push_back(unit(d, i, 2));
  }
  return out;
}

std::vector<Vec> all_roots(const System& sys) {
  auto pos = positive_roots(sys);
  std::vector<Vec> out = pos;
  for (auto& r : pos) out.push_back(vneg(r));
  return out;
}

Vec fundamental_weight2(const System& sys, int i) {
  const int n = sys.rank, d = sys.dim();
  if (i < 1 || i > n) throw std::invalid_argument("fundamental weight index");
  Vec v(d, 0);
  for (int j = 0; j < i; ++j) v[j] = 2;
  if (sys.family == Family::B && i == n) {
    for (int j = 0; j < n; ++j) v[j] = 1;
  }
  if (sys.family == Family::D && i >= n - 1) {
    for (int j = 0; j < n; ++j) v[j] = 1;
    if (i == n - 1) v[n - 1] = -1;
  }
  return canonical_weight2(sys, v);
}

Vec canonical_weight2(const System& sys, Vec b2) {
  if (sys.family == Family::A) {
    int last = b2.back();
    for (int& c : b2) c -= last;
  }
  return b2;
}

bool in_weight_lattice2(const System& sys, const Vec& b2) {
  if ((int)b2.size() != sys.dim()) return false;
  bool all_even = true, all_odd = true;
  for (int c : b2) {
    if (c % 2 == 0) all_odd = false;
    else all_even = false;
  }
  switch (sys.family) {
    case Family::A:
    case Family::C: return all_even;
    case Family::B:
    case Family::D: return all_even || all_odd;
  }
  return false;
}

bool in_root_lattice2(const System& sys, const Vec& b2) {
  if ((int)b2.size() != sys.dim()) return false;
  int sum = 0;
  for (int c : b2) {
    if (c % 2 != 0) return false;
    sum += c / 2;
  }
  switch (sys.family) {
    case Family::A: return ((sum % (sys.rank + 1)) + sys.rank + 1) % (sys.rank + 1) == 0;
    case Family::B: return true;
    case Family::C:
    case Family::D: return sum % 2 == 0;
  }
  return false;
}

Vec vadd(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
Vec vsub(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
Vec vneg(Vec a) {
  for (int& c : a) c = -c;
  return a;
}
Vec vscale(Vec a, int c) {
  for (int& x : a) x *= c;
  return a;
}
bool is_zero(const Vec& v) {
  for (int c : v)
    if (c) return false;
  return true;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace wngt
