// Command-line front end.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include "wngt/catalog.hpp"
#include "wngt/fixtures.hpp"
#include "wngt/json_io.hpp"
#include "wngt/planar.hpp"

using namespace wngt;

namespace {

struct BadArgs : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

int to_int(const std::string& s) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw BadArgs("bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw BadArgs("bad integer '" + s + "'");
  }
}

Word parse_word(const std::string& s) {
  Word w;
  for (auto& tok : split(s, ',')) {
    if (tok.empty()) continue;
    if (tok.rfind("pi:", 0) == 0) {
      w.pi = to_int(tok.substr(3));
      continue;
    }
    w.g.push_back(to_int(tok));
  }
  return w;
}

AffineRoot parse_root(const std::string& s) {
  auto at = s.find('@');
  if (at == std::string::npos) throw BadArgs("root needs the form c1,..,cn@k: " + s);
  AffineRoot r;
  for (auto& tok : split(s.substr(0, at), ',')) r.a.push_back(to_int(tok));
  r.k = to_int(s.substr(at + 1));
  return r;
}

System parse_system(const std::string& type, int rank) {
  if (type.size() != 1) throw BadArgs("type must be one of A, B, C, D");
  return make_system(family_from_char(type[0]), rank);
}

BPositiveData parse_data(int n, const std::string& s) {
  BPositiveData d;
  d.n = n;
  for (auto& kv : split(s, ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw BadArgs("data entries look like u=1");
    std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
    if (k == "u") d.u = to_int(v);
    else if (k == "v") d.v = to_int(v);
    else if (k == "p" || k == "t") {
      auto& dst = k == "p" ? d.p : d.t;
      for (auto& x : split(v, '/')) dst.push_back(to_int(x));
    } else throw BadArgs("unknown data key " + k);
  }
  return d;
}

void print_element(std::ostream& os, const Element& e) { os << element_str(e) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced words, lambda-sequences and non-gatherable triples in affine Weyl groups"};
  app.require_subcommand(1);

  std::string type = "B", word, triple, format = "text", out, mode = "brute", config, data;
  int rank = 3, max_len = 10, jobs = 0;
  size_t cap = 0;
  bool frozen = false, examples = false;

  auto* lam = app.add_subcommand("lambda", "lambda-sequence and element of a word");
  lam->add_option("--type", type)->required();
  lam->add_option("--rank", rank)->required();
  lam->add_option("--word", word, "comma separated generators, optional pi:J token");
  lam->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* gat = app.add_subcommand("gather", "gatherability of a triple in a reduced word");
  gat->add_option("--type", type)->required();
  gat->add_option("--rank", rank)->required();
  gat->add_option("--word", word)->required();
  gat->add_option("--triple", triple, "beta;gamma;alpha as c1,..,cn@k (default: the minimal NGT triple)");
  gat->add_option("--cap", cap, "BFS state cap (default WNGT_CAP or 1e6)");
  gat->add_flag("--frozen", frozen, "keep the initial segment");

  auto* cat = app.add_subcommand("catalog", "minimal NGT catalog as JSON lines");
  cat->add_option("--type", type)->required();
  cat->add_option("--rank", rank)->required();
  cat->add_option("--max-len", max_len)->required();
  cat->add_option("--mode", mode)->check(CLI::IsMember({"brute", "construct"}));
  cat->add_option("--out", out, "output file (default stdout)");
  cat->add_option("--jobs", jobs, "threads (0 = OpenMP default)");

  auto* ver = app.add_subcommand("verify", "replay the worked examples");
  ver->add_flag("--examples", examples)->required();

  auto* ren = app.add_subcommand("render", "SVG of a configuration");
  ren->add_option("--config", config, "configuration JSON file");
  ren->add_option("--rank", rank);
  ren->add_option("--data", data, "B-positive data, e.g. u=1,v=1,p=1/2/2,t=0/1/2");
  ren->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  if (jobs > 0) omp_set_num_threads(jobs);

  try {
    if (*lam) {
      System sys = parse_system(type, rank);
      Word w = parse_word(word);
      std::vector<AffineRoot> seq;
      try {
        seq = lambda_sequence(sys, w.g);
      } catch (const NonReduced& e) {
        std::cerr << "not reduced at position " << e.position << "\n";
        return 2;
      }
      Element e = from_ext_word(sys, w);
      if (format == "json") {
        json j = {{"element", to_json(e)}, {"length", seq.size()}, {"lambda", json::array()}};
        for (auto& r : seq) j["lambda"].push_back(to_json(r));
        std::cout << j.dump() << "\n";
      } else {
        for (auto& r : seq) std::cout << root_str(r) << "\n";
        print_element(std::cout, e);
        std::cout << "length " << seq.size() << "\n";
      }
      return 0;
    }
    if (*gat) {
      System sys = parse_system(type, rank);
      Word w = parse_word(word);
      try {
        lambda_sequence(sys, w.g);
      } catch (const NonReduced& e) {
        std::cerr << "not reduced at position " << e.position << "\n";
        return 2;
      }
      Triple t;
      if (triple.empty()) {
        auto m = is_minimal_ngt(sys, from_word(sys, w.g));
        if (!m) {
          std::cerr << "no triple given and the element is not a minimal NGT\n";
          return 1;
        }
        t = *m;
      } else {
        auto parts = split(triple, ';');
        if (parts.size() != 3) throw BadArgs("--triple needs beta;gamma;alpha");
        t = {parse_root(parts[0]), parse_root(parts[1]), parse_root(parts[2])};
      }
      GatherOptions opt;
      opt.frozen_segment = frozen;
      if (cap) opt.cap = cap;
      GatherResult r;
      try {
        r = is_gatherable(sys, w.g, t, opt);
      } catch (const TripleAbsent& e) {
        std::cerr << e.what() << "\n";
        return 1;
      }
      switch (r.outcome) {
        case GatherOutcome::Gatherable:
          std::cout << "gatherable (" << r.states << " states)\n";
          for (auto& m : r.witness) std::cout << "move at " << m.pos << " length " << m.m << "\n";
          std::cout << "word";
          for (int g : r.witness_word) std::cout << ' ' << g;
          std::cout << "\n";
          return 0;
        case GatherOutcome::NonGatherable:
          std::cout << "non-gatherable (" << r.states << " states)\n";
          return 3;
        case GatherOutcome::CapExceeded:
          std::cout << "cap exceeded (" << r.states << " states)\n";
          return 4;
      }
    }
    if (*cat) {
      System sys = parse_system(type, rank);
      Catalog c;
      if (mode == "brute") c = brute_enumerate(sys, max_len, jobs);
      else if (sys.family == Family::B) c = catalog_b(rank, max_len);
      else if (sys.family == Family::C || sys.family == Family::D) c = catalog_cd(sys.family, rank, max_len);
      else c = Catalog{sys, max_len, {}};  // no constructions in type A
      if (out.empty()) {
        write_catalog(std::cout, c);
      } else {
        std::ofstream f(out);
        if (!f) {
          std::cerr << "cannot write " << out << "\n";
          return 1;
        }
        write_catalog(f, c);
      }
      std::cerr << c.size() << " records\n";
      return 0;
    }
    if (*ver) {
      int failed = 0;
      for (auto& f : worked_examples()) {
        std::printf("%-24s %s  %s\n", f.name.c_str(), f.pass ? "PASS" : "FAIL", f.detail.c_str());
        failed += !f.pass;
      }
      return failed;
    }
    if (*ren) {
      Configuration cfg;
      if (!config.empty()) {
        std::ifstream f(config);
        if (!f) {
          std::cerr << "cannot read " << config << "\n";
          return 1;
        }
        cfg = config_from_json(json::parse(f));
      } else if (!data.empty()) {
        cfg = config_from_bpositive(parse_data(rank, data));
      } else {
        throw BadArgs("render needs --config or --data");
      }
      std::ofstream f(out);
      if (!f) {
        std::cerr << "cannot write " << out << "\n";
        return 1;
      }
      f << render_svg(cfg);
      return 0;
    }
  } catch (const BadArgs& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const InvalidSystem& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const IndexOutOfRange& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const InvalidData& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
