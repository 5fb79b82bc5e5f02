#include "wngt/catalog.hpp"

#include <mutex>
#include <sstream>

#include <omp.h>

#include "wngt/ball.hpp"

namespace wngt {

namespace {

const char* kKindNames[] = {"brute", "bpositive", "iota_b", "parity", "varpi", "subsys"};

std::optional<NgtRecord> make_record(const System& sys, const Element& e, Provenance prov) {
  auto t = is_minimal_ngt(sys, e);
  if (!t) return std::nullopt;
  NgtRecord r;
  r.element = e;
  r.triple = *t;
  r.provenance = std::move(prov);
  r.length = length(sys, e);
  r.k = simple_in_lambda(sys, e).front();
  return r;
}

int count_letter(const System& b_sys, const Element& e, int g) {
  int c = 0;
  for (int x : reduced_word(b_sys, e)) c += x == g;
  return c;
}

}  // namespace

std::string kind_name(Provenance::Kind k) { return kKindNames[int(k)]; }

Provenance::Kind kind_from_name(const std::string& s) {
  for (int i = 0; i < 6; ++i)
    if (s == kKindNames[i]) return Provenance::Kind(i);
  throw std::invalid_argument("unknown provenance " + s);
}

bool revalidate(const System& sys, const NgtRecord& r) {
  auto t = is_minimal_ngt(sys, r.element);
  return t && *t == r.triple && length(sys, r.element) == r.length;
}

Catalog brute_enumerate(const System& sys, int max_len, int threads) {
  Ball ball = ball_parallel(sys, max_len, threads);
  Catalog cat{sys, max_len, {}};
  std::mutex mu;
  bool cap_hit = false;
  std::string disagreement;
  long n = long(ball.size());
  if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < n; ++i) {
    auto rec = make_record(sys, ball.elems[i], {Provenance::Kind::BruteForce, ""});
    if (!rec) continue;
    auto g = is_gatherable(sys, ball.word(i), rec->triple);
    std::lock_guard<std::mutex> lock(mu);
    if (g.outcome == GatherOutcome::CapExceeded) {
      cap_hit = true;
      continue;
    }
    if (g.outcome == GatherOutcome::Gatherable) {
      disagreement = element_str(rec->element);
      continue;
    }
    cat.records.emplace(rec->element, *rec);
  }
  if (!disagreement.empty())
    throw std::logic_error("minimal NGT test and BFS disagree on " + disagreement);
  if (cap_hit) throw CapExceeded("BFS cap exceeded during brute enumeration");
  return cat;
}

std::string data_str(const BPositiveData& d) {
  std::ostringstream os;
  os << "n=" << d.n << " u=" << d.u << " v=" << d.v << " p=" << vec_str(d.p)
     << " t=" << vec_str(d.t);
  return os.str();
}

Catalog catalog_b(int n, int max_len) {
  System sys = make_system(Family::B, n);
  Catalog cat{sys, max_len, {}};
  // every middle line reflects at least 2t+1 times
  for (auto& d : bpositive_data(n, std::max(0, (max_len - 1) / 2))) {
    Element e = bpositive_element(d);
    if (length(sys, e) > max_len) continue;
    std::string ds = data_str(d);
    for (auto [el, kind] : {std::pair{e, Provenance::Kind::BPositive},
                            std::pair{iota_b_element(sys, e), Provenance::Kind::IotaB}}) {
      auto rec = make_record(sys, el, {kind, ds});
      if (!rec) {
        ++cat.failed_validation;
        continue;
      }
      cat.records.emplace(el, *rec);
    }
  }
  return cat;
}

Catalog catalog_cd(Family family, int n, int max_len) {
  if (family != Family::C && family != Family::D) throw std::invalid_argument("family must be C or D");
  System b_sys = make_system(Family::B, n);
  System sys = make_system(family, n);
  Catalog cat{sys, max_len, {}};
  Element s0 = simple_reflection(b_sys, 0);
  Element sn = simple_reflection(b_sys, n);
  auto mul = [&](const Element& x, const Element& y) { return multiply(b_sys, x, y); };

  // C-lengths never exceed B-lengths, and each bunch line still reflects t times.
  for (auto& d : bpositive_data(n, max_len)) {
    Element w = bpositive_element(d);
    Element iw = iota_b_element(b_sys, w);
    int tops = count_letter(b_sys, w, 0), bottoms = count_letter(b_sys, w, n);
    std::string ds = data_str(d);

    struct Cand {
      Element e;
      std::string recipe;
      bool rule_ok;  // horizontal-line constraint
    };
    std::vector<Cand> c;
    bool need_top = tops % 2;
    Element w1 = need_top ? mul(w, s0) : w;
    Element w2 = need_top ? mul(s0, w) : mul(mul(s0, w), s0);
    Element ws = (bottoms % 2) ? mul(iw, s0) : iw;
    std::vector<Cand> base{{w1, need_top ? "w s0" : "w", true},
                           {w2, need_top ? "s0 w" : "s0 w s0", true},
                           {ws, (bottoms % 2) ? "iota_B(w) s0" : "iota_B(w)", d.v >= 2}};
    if (family == Family::C) {
      c = base;
    } else {
      for (int j = 0; j < 3; ++j) {
        auto& b = base[j];
        bool odd = j < 2 ? bottoms % 2 : tops % 2;
        bool ok = d.v >= 2;
        if (!odd) {
          c.push_back({b.e, b.recipe, ok});
          // mirror image under the n-1 <-> n symmetry; trivial for w', w''
          if (j == 2) c.push_back({mul(mul(sn, b.e), sn), "sn " + b.recipe + " sn", ok});
        } else if (j < 2) {
          c.push_back({mul(sn, b.e), "sn " + b.recipe, ok});
        } else {
          c.push_back({mul(b.e, sn), b.recipe + " sn", ok});
          c.push_back({mul(sn, b.e), "sn " + b.recipe, ok});
        }
      }
    }
    for (auto& cand : c) {
      if (length(sys, cand.e) > max_len) continue;
      if (!cand.rule_ok) {
        ++cat.excluded_by_rule;
        if (!is_minimal_ngt(sys, cand.e)) ++cat.excluded_confirmed;
        continue;
      }
      auto rec = make_record(sys, cand.e, {Provenance::Kind::ParityCorrected, cand.recipe + "; " + ds});
      if (!rec) {
        ++cat.failed_validation;
        continue;
      }
      cat.records.emplace(cand.e, *rec);
    }
  }
  return cat;
}

CrossReport cross_validate(const Catalog& c1, const Catalog& c2) {
  CrossReport rep;
  std::ostringstream os;
  auto describe = [&](const System& sys, const Element& e, const char* where) {
    os << where << ": " << element_str(e) << " length " << length(sys, e);
    auto ep = nonmovable_endpoints(sys, e);
    os << " first " << (ep.first ? root_str(*ep.first) : "movable") << " last "
       << (ep.last ? root_str(*ep.last) : "movable") << "\n  lambda:";
    for (auto& r : lambda_sequence(sys, reduced_word(sys, e))) os << ' ' << root_str(r);
    os << "\n";
  };
  if (!(c1.sys == c2.sys)) os << "systems differ: " << c1.sys.name() << " vs " << c2.sys.name() << "\n";
  for (auto& [e, r] : c1.records)
    if (!c2.records.count(e)) {
      rep.missing.push_back(e);
      describe(c1.sys, e, "only in first");
    }
  for (auto& [e, r] : c2.records)
    if (!c1.records.count(e)) {
      rep.extra.push_back(e);
      describe(c2.sys, e, "only in second");
    }
  rep.equal = rep.missing.empty() && rep.extra.empty() && c1.sys == c2.sys;
  rep.diagnostics = os.str();
  return rep;
}

}  // namespace wngt
