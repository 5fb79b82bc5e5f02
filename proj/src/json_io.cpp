#include "wngt/json_io.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace wngt {

namespace {

const char* kEventNames[] = {"cross", "top", "bottom", "pi"};

EventKind event_kind(const std::string& s) {
  for (int i = 0; i < 4; ++i)
    if (s == kEventNames[i]) return EventKind(i);
  throw FormatError("unknown event kind " + s);
}

}  // namespace

json to_json(const AffineRoot& r) { return {{"a", r.a}, {"k", r.k}}; }
json to_json(const Element& e) { return {{"b2", e.b2}, {"w", e.w.s}}; }
json to_json(const Triple& t) {
  return {{"beta", to_json(t.beta)}, {"gamma", to_json(t.gamma)}, {"alpha", to_json(t.alpha)}};
}

json to_json(const Configuration& c) {
  json ev = json::array();
  for (auto& e : c.events) ev.push_back({{"kind", kEventNames[int(e.kind)]}, {"slot", e.slot}});
  return {{"format", 1}, {"n", c.n}, {"events", ev}};
}

json to_json(const NgtRecord& r) {
  return {{"element", to_json(r.element)},
          {"triple", to_json(r.triple)},
          {"provenance", {{"kind", kind_name(r.provenance.kind)}, {"detail", r.provenance.detail}}},
          {"length", r.length},
          {"k", r.k}};
}

AffineRoot root_from_json(const json& j) { return {j.at("a").get<Vec>(), j.at("k").get<int>()}; }
Element element_from_json(const json& j) {
  return {j.at("b2").get<Vec>(), SignedPerm{j.at("w").get<std::vector<int>>()}};
}
Triple triple_from_json(const json& j) {
  return {root_from_json(j.at("beta")), root_from_json(j.at("gamma")), root_from_json(j.at("alpha"))};
}

Configuration config_from_json(const json& j) {
  if (j.value("format", 1) != 1) throw FormatError("unsupported configuration format");
  Configuration c;
  c.n = j.at("n").get<int>();
  for (auto& e : j.at("events"))
    c.events.push_back({event_kind(e.at("kind").get<std::string>()), e.value("slot", 0)});
  return c;
}

NgtRecord record_from_json(const json& j) {
  NgtRecord r;
  r.element = element_from_json(j.at("element"));
  r.triple = triple_from_json(j.at("triple"));
  auto& p = j.at("provenance");
  r.provenance = {kind_from_name(p.at("kind").get<std::string>()), p.value("detail", "")};
  r.length = j.at("length").get<int>();
  r.k = j.value("k", 0);
  return r;
}

void write_catalog(std::ostream& os, const Catalog& c) {
  json h = {{"format", 1},
            {"family", std::string(1, family_char(c.sys.family))},
            {"rank", c.sys.rank},
            {"max_length", c.max_length},
            {"records", c.records.size()}};
  os << h.dump() << '\n';
  for (auto& [e, r] : c.records) os << to_json(r).dump() << '\n';
}

Catalog read_catalog(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty catalog");
  json h;
  try {
    h = json::parse(line);
    if (h.at("format").get<int>() != 1) throw FormatError("unsupported catalog format");
    Catalog c;
    c.sys = make_system(family_from_char(h.at("family").get<std::string>().at(0)), h.at("rank").get<int>());
    c.max_length = h.at("max_length").get<int>();
    int lineno = 1;
    while (std::getline(is, line)) {
      ++lineno;
      if (line.empty()) continue;
      NgtRecord r = record_from_json(json::parse(line));
      if (!revalidate(c.sys, r))
        throw FormatError("record on line " + std::to_string(lineno) + " fails re-validation");
      if (!c.records.emplace(r.element, r).second)
        throw FormatError("duplicate element on line " + std::to_string(lineno));
    }
    return c;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace wngt
