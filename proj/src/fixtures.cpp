#include "wngt/fixtures.hpp"

#include <functional>
#include <sstream>

#include "wngt/ngt.hpp"
#include "wngt/planar.hpp"

namespace wngt {

namespace {

using Check = std::function<bool(std::ostringstream&)>;

Vec dbl(std::vector<int> b) {
  for (int& x : b) x *= 2;
  return b;
}

bool six_line(std::ostringstream& os) {
  System s = make_system(Family::B, 6);
  Configuration cfg = config_from_bpositive({6, 1, 2, {3}, {1}});
  Word w = word_from_config(s, cfg);
  Element e = element_from_angles(s, cfg);
  Element want{dbl({0, -1, -1, -1, 0, 0}), {{1, -4, -3, -2, 5, 6}}};
  Element refl = multiply(s, affine_reflection(s, {{0, 1, 0, 1, 0, 0}, 2}),
                          affine_reflection(s, {{0, 0, 1, 0, 0, 0}, 1}));
  os << element_str(e) << ", length " << w.g.size();
  return e == want && from_word(s, w.g) == e && multiply(s, e, e) == identity(s) &&
         is_minimal_ngt(s, e).has_value() && refl == e;
}

bool top_reflection(std::ostringstream& os) {
  System s = make_system(Family::B, 4);
  Configuration cfg{4, {{EventKind::Top, 1}}};
  Element e = element_from_angles(s, cfg);
  os << element_str(e);
  return e == Element{{2, 0, 0, 0}, {{-1, 2, 3, 4}}} && e == simple_reflection(s, 0) &&
         angles_as_lambda(s, cfg) == std::vector<AffineRoot>{simple_affine_root(s, 0)};
}

bool seven_line(std::ostringstream& os) {
  BPositiveData d{7, 1, 1, {1, 2, 2}, {0, 1, 2}};
  System s = make_system(Family::B, 7);
  Configuration cfg = config_from_bpositive(d);
  Element e = element_from_angles(s, cfg);
  auto prof = line_profiles(cfg);
  std::vector<int> t = {0, 0, 1, 1, 2, 2, 0};
  std::vector<int> b = {0, 1, 2, 2, 3, 3, 0};
  bool ok = true;
  for (int i = 0; i < 7; ++i) ok &= prof[i].t_count == t[i] && prof[i].b_count == b[i];
  os << element_str(e) << ", length " << cfg.events.size();
  return ok && multiply(s, e, e) == identity(s) && is_minimal_ngt(s, e).has_value();
}

const Element kWp{dbl({-1, -1, -1, 0, 0}), {{-3, -2, -1, 4, 5}}};

bool parity_top_right(std::ostringstream& os) {
  System c5 = make_system(Family::C, 5);
  Element w = parity_correct_element(5, kWp, Side::TopRight);
  os << element_str(w);
  return w == Element{dbl({-1, -1, -2, 0, 0}), {{-3, -2, 1, 4, 5}}} &&
         is_minimal_ngt(c5, w).has_value() &&
         bpositive_element({5, 0, 2, {3}, {1}}) == kWp;
}

bool parity_inverse(std::ostringstream& os) {
  System b5 = make_system(Family::B, 5);
  Element w = parity_correct_element(5, kWp, Side::TopRight);
  Element inv = inverse(b5, w);
  Element printed{dbl({2, -1, -1, 0, 0}), {{3, -2, 1, 4, 5}}};
  os << element_str(inv);
  if (!(inv == printed)) os << " (printed permutation " << perm_str(printed.w) << " differs)";
  return inv.b2 == dbl({2, -1, -1, 0, 0}) &&
         inv == parity_correct_element(5, kWp, Side::TopLeft) &&
         inv.w == SignedPerm{{3, -2, -1, 4, 5}};
}

bool parity_double(std::ostringstream& os) {
  System b5 = make_system(Family::B, 5), c5 = make_system(Family::C, 5);
  System b6 = make_system(Family::B, 6);
  Element w2{dbl({0, -1, -1, 0, 0}), {{-1, -3, -2, 4, 5}}};
  Element s0 = simple_reflection(b5, 0);
  Element sharp = multiply(b5, multiply(b5, s0, w2), s0);
  Element six = bpositive_element({6, 1, 2, {3}, {1}});
  Element s06 = simple_reflection(b6, 0);
  os << element_str(sharp);
  return is_minimal_ngt(c5, sharp).has_value() &&
         multiply(b6, multiply(b6, s06, six), s06) == six;
}

bool bottom_sides(std::ostringstream& os) {
  Element six = bpositive_element({6, 1, 2, {3}, {1}});
  Element l = parity_correct_element(6, six, Side::BottomLeft);
  Element r = parity_correct_element(6, six, Side::BottomRight);
  Element tl = parity_correct_element(6, six, Side::TopLeft);
  Element tr = parity_correct_element(6, six, Side::TopRight);
  os << "bottom " << (l == r ? "equal" : "differ") << ", top " << (tl == tr ? "equal" : "differ");
  return l == r;
}

bool d4_varpi(std::ostringstream& os) {
  System s = make_system(Family::D, 4);
  VarpiData d = build_varpi(s, {-2, -2, 0, 0}, 2, perm_identity(4));
  if (!d.triple) return false;
  Triple want{{{1, 0, 1, 0}, 1}, {{1, 1, 0, 0}, 1}, {{0, 1, -1, 0}, 0}};
  auto g = is_gatherable(s, reduced_word(s, d.varpi), *d.triple);
  auto na = nonaffine_from_affine(s, d);
  os << element_str(d.varpi) << ", length " << length(s, d.varpi);
  return d.report.valid() && *d.triple == want && g.outcome == GatherOutcome::NonGatherable &&
         na.u && is_minimal_ngt(s, from_perm(s, *na.u)).has_value();
}

bool braid_424(std::ostringstream& os) {
  System d4 = make_system(Family::D, 4), b4 = make_system(Family::B, 4);
  bool ok = from_word(d4, {4, 2, 4}) == from_word(d4, {2, 4, 2});
  ok &= from_word(b4, expand_to_b(d4, {4, 2, 4})) == from_word(b4, expand_to_b(d4, {2, 4, 2}));
  ok &= from_word(b4, {4, 3, 4}) == simple_reflection(d4, 4);
  os << "s4' s2 s4' = s2 s4' s2";
  return ok;
}

bool cd_top_angles(std::ostringstream& os) {
  System c4 = make_system(Family::C, 4);
  std::vector<int> w = {4, 3, 2, 0, 4, 3, 2, 1, 4, 3, 2, 0};
  Configuration cfg = config_from_word(c4, {0, w});
  auto ang = angles_as_lambda(c4, cfg);
  AffineRoot r1{{-1, 0, 0, 1}, 1}, r2{{0, 1, 1, 0}, 1};
  bool a = false, b = false;
  for (size_t p = 0; p < w.size(); ++p)
    if (w[p] == 0) a |= ang[p] == r1, b |= ang[p] == r2;
  os << "top events " << root_str(ang[3]) << ' ' << root_str(ang[11]);
  return ang == lambda_sequence(c4, w) && a && b;
}

bool regrouping(std::ostringstream& os) {
  System c3 = make_system(Family::C, 3), d4 = make_system(Family::D, 4);
  bool ok = regroup_to_cd(c3, {0, 1, 0}) == std::vector<int>{0};
  ok &= regroup_to_cd(d4, {4, 3, 4}) == std::vector<int>{4};
  try {
    regroup_to_cd(c3, {0, 1, 0, 2, 0});
    ok = false;
  } catch (const ParityViolation& e) {
    ok &= e.which == "top";
  }
  ok &= iota_c_element(c3, simple_reflection(c3, 0)) == simple_reflection(c3, 1);
  os << "010 -> 0, 434 -> 4 in D4, odd top count rejected";
  return ok;
}

bool pi_family(std::ostringstream& os) {
  int n = 0;
  for (Family f : {Family::B, Family::C})
    for (int i = 1; i <= 3; ++i)
      for (int m = -2; m <= 2; ++m) {
        System s = make_system(f, 3);
        Element p = vthpib_family(s, i, m, {0, 0, 0});
        if (length(s, p) == 0) continue;
        auto ep = nonmovable_endpoints(s, p);
        auto sr = simple_in_lambda(s, inverse(s, p));
        Vec ai = simple_roots(s)[i - 1];
        bool ok = ep.first && *ep.first == simple_affine_root(s, 0) && ep.last && sr.size() == 1 &&
                  !is_minimal_ngt(s, p);
        if (m <= 0) ok &= sr[0] == 0;
        else ok &= *ep.last == AffineRoot{vneg(ai), nu(s, ai) * m};
        if (!ok) return false;
        ++n;
      }
  os << n << " elements with c = 0";
  return true;
}

}  // namespace

std::vector<FixtureResult> worked_examples() {
  std::vector<std::pair<std::string, Check>> list = {
      {"six_line_involution", six_line},   {"top_reflection_angles", top_reflection},
      {"seven_line_bunches", seven_line},  {"parity_top_right", parity_top_right},
      {"parity_inverse", parity_inverse},  {"parity_double_top", parity_double},
      {"parity_bottom_sides", bottom_sides}, {"d4_varpi_triple", d4_varpi},
      {"d4_braid_424", braid_424},         {"cd_top_event_angles", cd_top_angles},
      {"cd_regrouping", regrouping},       {"pi_b_endpoints", pi_family},
  };
  std::vector<FixtureResult> out;
  for (auto& [name, fn] : list) {
    std::ostringstream os;
    bool pass = false;
    try {
      pass = fn(os);
    } catch (const std::exception& e) {
      os << " threw: " << e.what();
    }
    out.push_back({name, pass, os.str()});
  }
  return out;
}

}  // namespace wngt
