// JSON forms of elements, roots, configurations and catalogs (JSON-lines).
#pragma once

#include <iosfwd>
#include <stdexcept>

#include <json.hpp>

#include "wngt/catalog.hpp"

namespace wngt {

using json = nlohmann::json;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const AffineRoot& r);
json to_json(const Element& e);
json to_json(const Triple& t);
json to_json(const Configuration& c);
json to_json(const NgtRecord& r);

AffineRoot root_from_json(const json& j);
Element element_from_json(const json& j);
Triple triple_from_json(const json& j);
Configuration config_from_json(const json& j);
NgtRecord record_from_json(const json& j);

// Header line, then one record per line, sorted by element.
void write_catalog(std::ostream& os, const Catalog& c);
// Every record is re-validated; throws FormatError on a bad line or record.
Catalog read_catalog(std::istream& is);

}  // namespace wngt
