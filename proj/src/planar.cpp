#include "wngt/planar.hpp"

#include <algorithm>
#include <sstream>

#include "wngt/ngt.hpp"

namespace wngt {

namespace {

System b_system(int n) { return make_system(Family::B, n); }

int gen_of(const Event& e, int n) {
  switch (e.kind) {
    case EventKind::Cross: return e.slot;
    case EventKind::Top: return 0;
    case EventKind::Bottom: return n;
    case EventKind::Pi: return -1;
  }
  return -1;
}

Event event_of(int g, int n) {
  if (g == 0) return {EventKind::Top, 1};
  if (g == n) return {EventKind::Bottom, n};
  return {EventKind::Cross, g};
}

// Absolute angle: h half-deltas plus sgn(label) e_|label|.
struct Angle {
  int h = 0;
  int label = 0;
};

Vec unit(int n, int label) {
  Vec v(n, 0);
  v[std::abs(label) - 1] = label > 0 ? 1 : -1;
  return v;
}

struct Sweep {
  std::vector<Angle> slots;
  std::vector<AffineRoot> b_angles;  // B units: level in half-deltas
  std::vector<LineProfile> profiles;
};

Sweep sweep(const Configuration& cfg) {
  int n = cfg.n;
  Sweep s;
  s.slots.resize(n);
  for (int i = 0; i < n; ++i) s.slots[i] = {0, i + 1};
  s.profiles.resize(n);
  Element pi_n;
  bool have_pi = false;
  for (auto& ev : cfg.events) {
    auto& A = s.slots;
    switch (ev.kind) {
      case EventKind::Cross: {
        int i = ev.slot - 1;
        if (i < 0 || i + 1 >= n) throw IndexOutOfRange("crossing slot");
        s.b_angles.push_back({vsub(unit(n, A[i].label), unit(n, A[i + 1].label)),
                              A[i].h - A[i + 1].h});
        std::swap(A[i], A[i + 1]);
        break;
      }
      case EventKind::Top: {
        auto& a = A[0];
        s.b_angles.push_back({vneg(unit(n, a.label)), 1 - a.h});
        auto& pr = s.profiles[std::abs(a.label) - 1];
        if (pr.first == LineProfile::First::None) pr.first = LineProfile::First::Top;
        ++pr.t_count;
        a = {2 - a.h, -a.label};
        break;
      }
      case EventKind::Bottom: {
        auto& a = A[n - 1];
        s.b_angles.push_back({unit(n, a.label), a.h});
        auto& pr = s.profiles[std::abs(a.label) - 1];
        if (pr.first == LineProfile::First::None) pr.first = LineProfile::First::Bottom;
        ++pr.b_count;
        a = {-a.h, -a.label};
        break;
      }
      case EventKind::Pi: {
        if (!have_pi) {
          pi_n = pi_group(b_system(n)).at(1);
          have_pi = true;
        }
        std::vector<Angle> B(n);
        for (int i = 0; i < n; ++i) {
          int src = pi_n.w.s[i];
          Angle a = A[std::abs(src) - 1];
          if (src < 0) a = {-a.h, -a.label};
          a.h += pi_n.b2[i];
          B[i] = a;
        }
        A = B;
        break;
      }
    }
  }
  return s;
}

Element element_of(const Sweep& s) {
  Element e;
  for (auto& a : s.slots) {
    e.b2.push_back(a.h);
    e.w.s.push_back(a.label);
  }
  return e;
}

bool is_cd(const System& sys) { return sys.family == Family::C || sys.family == Family::D; }

// Groups a B event list into C/D letters; each letter keeps the index of the
// B event whose angle it carries. Returns false when the events do not group.
bool group_events(const System& sys, const Configuration& cfg, std::vector<int>& word,
                  std::vector<int>& carrier) {
  int n = cfg.n;
  auto& ev = cfg.events;
  for (size_t p = 0; p < ev.size(); ++p) {
    auto k = ev[p].kind;
    if (k == EventKind::Pi) return false;
    if (k == EventKind::Top) {
      if (p + 2 >= ev.size() || !(ev[p + 1] == Event{EventKind::Cross, 1}) ||
          ev[p + 2].kind != EventKind::Top)
        return false;
      word.push_back(0);
      carrier.push_back(int(p) + 1);
      p += 2;
    } else if (k == EventKind::Bottom && sys.family == Family::D) {
      if (p + 2 >= ev.size() || !(ev[p + 1] == Event{EventKind::Cross, n - 1}) ||
          ev[p + 2].kind != EventKind::Bottom)
        return false;
      word.push_back(n);
      carrier.push_back(int(p) + 1);
      p += 2;
    } else {
      word.push_back(gen_of(ev[p], n));
      carrier.push_back(int(p));
    }
  }
  return true;
}

}  // namespace

Word b_word_from_config(const Configuration& cfg) {
  int n = cfg.n;
  Word out;
  // Process right to left in the element: letters after a Pi mark are conjugated.
  std::vector<int> perm(n + 1);
  for (int i = 0; i <= n; ++i) perm[i] = i;
  int pis = 0;
  std::vector<int> pperm;
  for (auto& ev : cfg.events)
    if (ev.kind == EventKind::Pi) ++pis;
  if (pis) pperm = pi_index_permutation(b_system(n), pi_group(b_system(n)).at(1));
  // element = ... s_g pi ... = pi^c * (conjugated letters); pi_n is an involution.
  int parity = 0;
  for (auto& ev : cfg.events) {
    if (ev.kind == EventKind::Pi) {
      parity ^= 1;
      continue;
    }
    int g = gen_of(ev, n);
    out.g.push_back(parity ? pperm[g] : g);
  }
  out.pi = parity;
  return out;
}

Word word_from_config(const System& sys, const Configuration& cfg) {
  if (sys.rank != cfg.n) throw std::invalid_argument("rank mismatch");
  Word w;
  if (sys.family == Family::B) {
    w = b_word_from_config(cfg);
  } else if (is_cd(sys)) {
    std::vector<int> carrier;
    if (!group_events(sys, cfg, w.g, carrier)) {
      Word bw = b_word_from_config(cfg);
      if (bw.pi) throw std::invalid_argument("pi mark outside type B");
      w.g = regroup_to_cd(sys, bw.g);
    }
  } else {
    throw std::invalid_argument("planar model covers B, C, D");
  }
  try {
    lambda_sequence(sys, w.g);
  } catch (const NonReduced& e) {
    throw NotReducedConfig(e.what());
  }
  return w;
}

std::vector<int> expand_to_b(const System& sys, const std::vector<int>& word) {
  int n = sys.rank;
  std::vector<int> out;
  for (int g : word) {
    if (is_cd(sys) && g == 0) {
      out.insert(out.end(), {0, 1, 0});
    } else if (sys.family == Family::D && g == n) {
      out.insert(out.end(), {n, n - 1, n});
    } else {
      out.push_back(g);
    }
  }
  return out;
}

Configuration config_from_word(const System& sys, const Word& w) {
  Configuration cfg{sys.rank, {}};
  if (w.pi && sys.family != Family::B) throw std::invalid_argument("pi mark outside type B");
  if (w.pi > 1) throw std::invalid_argument("pi index");
  for (int g : expand_to_b(sys, w.g)) {
    if (g < 0 || g > sys.rank) throw IndexOutOfRange("generator");
    cfg.events.push_back(event_of(g, sys.rank));
  }
  if (w.pi) cfg.events.push_back({EventKind::Pi, 0});
  return cfg;
}

Element element_from_angles(const System& sys, const Configuration& cfg) {
  if (sys.rank != cfg.n) throw std::invalid_argument("rank mismatch");
  return element_of(sweep(cfg));
}

std::vector<AffineRoot> angles_as_lambda(const System& sys, const Configuration& cfg) {
  if (sys.rank != cfg.n) throw std::invalid_argument("rank mismatch");
  if (sys.family == Family::B) return sweep(cfg).b_angles;
  if (!is_cd(sys)) throw std::invalid_argument("planar model covers B, C, D");
  std::vector<int> word, carrier;
  Configuration c = cfg;
  if (!group_events(sys, c, word, carrier)) {
    c = config_from_word(sys, word_from_config(sys, cfg));
    word.clear();
    carrier.clear();
    group_events(sys, c, word, carrier);
  }
  auto ang = sweep(c).b_angles;
  std::vector<AffineRoot> out;
  for (size_t p = 0; p < word.size(); ++p) {
    AffineRoot r = ang[carrier[p]];
    bool single_bottom = sys.family == Family::C && word[p] == sys.rank;
    if (single_bottom) {
      out.push_back({vscale(r.a, 2), r.k});
    } else {
      if (r.k % 2) throw std::logic_error("odd half-delta angle in C/D");
      out.push_back({r.a, r.k / 2});
    }
  }
  return out;
}

std::vector<LineProfile> line_profiles(const Configuration& cfg) { return sweep(cfg).profiles; }

void validate(const BPositiveData& d) {
  if (d.n < 3) throw InvalidData("n >= 3 required");
  if (d.u < 0) throw InvalidData("u >= 0 required");
  if (d.v < 1) throw InvalidData("v >= 1 required");
  int m = d.n - d.u - d.v;
  if (m < 2) throw InvalidData("n - u - v >= 2 required");
  if (d.p.empty() || d.p.size() != d.t.size()) throw InvalidData("p and t must have equal length r >= 1");
  int sum = 0;
  for (int x : d.p) {
    if (x < 1) throw InvalidData("bunch sizes must be positive");
    sum += x;
  }
  if (sum != m) throw InvalidData("bunch sizes must add up to n - u - v");
  if (d.p.back() < 2) throw InvalidData("the last bunch needs at least two lines");
  if (d.t.front() < 0) throw InvalidData("t-numbers must be nonnegative");
  for (size_t j = 1; j < d.t.size(); ++j)
    if (d.t[j] <= d.t[j - 1]) throw InvalidData("t-numbers must increase strictly");
}

Element bpositive_element(const BPositiveData& d) {
  validate(d);
  System sys = b_system(d.n);
  Vec b2(d.n, 0);
  int slot = d.u;
  for (size_t j = 0; j < d.p.size(); ++j)
    for (int q = 0; q < d.p[j]; ++q) b2[slot++] = -2 * d.t[j];
  int k = d.n - d.v;
  // w0' and dot_w0' on the subdiagram {u+1..n}; dot part drops k and the
  // simple roots with (b, alpha_j) != 0.
  std::vector<int> sub, dot;
  auto simple = simple_roots(sys);
  for (int j = d.u + 1; j <= d.n; ++j) {
    sub.push_back(j);
    if (j != k && inner_half(sys, simple[j - 1], b2) == 0) dot.push_back(j);
  }
  SignedPerm ups = perm_mul(parabolic_longest(sys, sub), parabolic_longest(sys, dot));
  return {b2, perm_inv(ups)};
}

Configuration config_from_element(const System& b_sys, const Element& e) {
  Configuration cfg{b_sys.rank, {}};
  Element x = e;
  int len = length(b_sys, x);
  while (len > 0) {
    int g = simple_in_lambda(b_sys, x).front();
    cfg.events.push_back(event_of(g, b_sys.rank));
    x = multiply(b_sys, x, simple_reflection(b_sys, g));
    --len;
  }
  if (!(x == identity(b_sys))) throw std::logic_error("element outside the non-extended group");
  return cfg;
}

Configuration config_from_bpositive(const BPositiveData& d) {
  return config_from_element(b_system(d.n), bpositive_element(d));
}

std::vector<BPositiveData> bpositive_data(int n, int t_max) {
  std::vector<BPositiveData> out;
  for (int u = 0; u <= n - 3; ++u)
    for (int v = 1; u + v <= n - 2; ++v) {
      int m = n - u - v;
      // compositions of m with last part >= 2
      std::vector<int> p;
      auto comp = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
          if (p.back() < 2) return;
          int r = int(p.size());
          std::vector<int> t;
          auto pick = [&](auto&& me, int lo) -> void {
            if ((int)t.size() == r) {
              out.push_back({n, u, v, p, t});
              return;
            }
            for (int x = lo; x <= t_max; ++x) {
              t.push_back(x);
              me(me, x + 1);
              t.pop_back();
            }
          };
          pick(pick, 0);
          return;
        }
        for (int x = 1; x <= rest; ++x) {
          p.push_back(x);
          self(self, rest - x);
          p.pop_back();
        }
      };
      comp(comp, m);
    }
  return out;
}

Configuration iota_b(const Configuration& cfg) {
  Configuration out{cfg.n, {}};
  for (auto ev : cfg.events) {
    switch (ev.kind) {
      case EventKind::Cross: ev.slot = cfg.n - ev.slot; break;
      case EventKind::Top: ev = {EventKind::Bottom, cfg.n}; break;
      case EventKind::Bottom: ev = {EventKind::Top, 1}; break;
      case EventKind::Pi: break;
    }
    out.events.push_back(ev);
  }
  return out;
}

Element iota_b_element(const System& b_sys, const Element& e) {
  Element p = pi_group(b_sys).at(1);
  return multiply(b_sys, multiply(b_sys, p, e), inverse(b_sys, p));
}

std::vector<int> iota_c(const std::vector<int>& c_word) {
  std::vector<int> out;
  for (int g : c_word) out.push_back(g == 0 ? 1 : g == 1 ? 0 : g);
  return out;
}

Element iota_c_element(const System& sys, const Element& e) {
  Element s0 = simple_reflection(b_system(sys.rank), 0);
  return multiply(sys, multiply(sys, s0, e), s0);
}

std::vector<int> parity_correct(int n, const std::vector<int>& b_word, Side side) {
  std::vector<int> out = b_word;
  int g = (side == Side::TopLeft || side == Side::TopRight) ? 0 : n;
  if (side == Side::TopRight || side == Side::BottomRight)
    out.insert(out.begin(), g);
  else
    out.push_back(g);
  return out;
}

Element parity_correct_element(int n, const Element& e, Side side) {
  System sys = b_system(n);
  int g = (side == Side::TopLeft || side == Side::TopRight) ? 0 : n;
  Element s = simple_reflection(sys, g);
  bool right = side == Side::TopRight || side == Side::BottomRight;
  return right ? multiply(sys, e, s) : multiply(sys, s, e);
}

std::vector<int> regroup_to_cd(const System& target, const std::vector<int>& b_word) {
  if (!is_cd(target)) throw std::invalid_argument("target must be C or D");
  int n = target.rank;
  int tops = 0, bottoms = 0;
  for (int g : b_word) {
    if (g < 0 || g > n) throw IndexOutOfRange("generator");
    tops += g == 0;
    bottoms += g == n;
  }
  if (tops % 2) throw ParityViolation("top");
  if (target.family == Family::D && bottoms % 2) throw ParityViolation("bottom");
  // Same affine map in both models; a fresh reduced word in the target generators.
  Element e = from_word(b_system(n), b_word);
  return reduced_word(target, e);
}

std::string render_svg(const Configuration& cfg, const SvgOptions& opt) {
  int n = cfg.n;
  int cols = int(cfg.events.size());
  int width = 2 * opt.margin + (cols + 1) * opt.column;
  int top = opt.margin + opt.row;  // room for the slanted top mirror
  int height = top + (n + 1) * opt.row + opt.margin + (opt.labels ? opt.row : 0);
  int bottom_y = top + n * opt.row + opt.row / 2;
  auto slot_y = [&](int slot) { return top + slot * opt.row - opt.row / 2; };
  // x of column c, reading right to left
  auto col_x = [&](int c) { return width - opt.margin - c * opt.column; };

  // slot of each line at each column boundary
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[i] = i + 1;
  std::vector<std::vector<std::pair<int, int>>> pts(n);
  for (int i = 0; i < n; ++i) pts[i].push_back({col_x(0), slot_y(i + 1)});
  std::vector<std::pair<int, int>> labels;
  auto pi_perm = n > 0 && std::any_of(cfg.events.begin(), cfg.events.end(),
                                      [](const Event& e) { return e.kind == EventKind::Pi; })
                     ? pi_group(b_system(n)).at(1).w.s
                     : std::vector<int>{};
  for (int c = 0; c < cols; ++c) {
    auto& ev = cfg.events[c];
    int xm = (col_x(c) + col_x(c + 1)) / 2;
    int xe = col_x(c + 1);
    std::vector<int> line_at(n + 1);
    for (int i = 0; i < n; ++i) line_at[pos[i]] = i;
    switch (ev.kind) {
      case EventKind::Cross: {
        int a = line_at[ev.slot], b = line_at[ev.slot + 1];
        std::swap(pos[a], pos[b]);
        labels.push_back({xm, ev.slot});
        break;
      }
      case EventKind::Top: {
        int a = line_at[1];
        pts[a].push_back({xm, top - opt.row / 2});
        labels.push_back({xm, 0});
        break;
      }
      case EventKind::Bottom: {
        int a = line_at[n];
        pts[a].push_back({xm, bottom_y});
        labels.push_back({xm, n});
        break;
      }
      case EventKind::Pi: {
        std::vector<int> np(n);
        for (int s = 1; s <= n; ++s) np[line_at[std::abs(pi_perm[s - 1])]] = s;
        pos = np;
        labels.push_back({xm, -1});
        break;
      }
    }
    for (int i = 0; i < n; ++i) pts[i].push_back({xe, slot_y(pos[i])});
  }

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  int left = opt.margin / 2, right = width - opt.margin / 2;
  os << "<line class=\"mirror\" x1=\"" << left << "\" y1=\"" << bottom_y << "\" x2=\"" << right
     << "\" y2=\"" << bottom_y << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  os << "<line class=\"mirror\" x1=\"" << left << "\" y1=\"" << top - opt.row / 2 + opt.row / 4
     << "\" x2=\"" << right << "\" y2=\"" << top - opt.row / 2 - opt.row / 4
     << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (int i = 0; i < n; ++i) {
    os << "<polyline class=\"line\" fill=\"none\" stroke=\"steelblue\" points=\"";
    for (size_t q = 0; q < pts[i].size(); ++q)
      os << (q ? " " : "") << pts[i][q].first << ',' << pts[i][q].second;
    os << "\"/>\n";
    os << "<text x=\"" << col_x(0) + 6 << "\" y=\"" << slot_y(i + 1) + 4 << "\" font-size=\"12\">"
       << i + 1 << "</text>\n";
  }
  if (opt.labels) {
    int ly = bottom_y + opt.row;
    for (auto& [x, g] : labels) {
      if (g < 0)
        os << "<text class=\"event\" x=\"" << x << "\" y=\"" << ly
           << "\" font-size=\"11\" text-anchor=\"middle\">pi</text>\n";
      else
        os << "<text class=\"event\" x=\"" << x << "\" y=\"" << ly
           << "\" font-size=\"11\" text-anchor=\"middle\">" << g << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace wngt
