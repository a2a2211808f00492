#include "cgl/catalog.hpp"

#include <fstream>

#include "cgl/errors.hpp"

namespace cgl {

using nlohmann::json;

std::vector<Permutation> CatalogEntry::permutations() const {
  std::vector<Permutation> out;
  out.reserve(generators.size());
  for (const auto& cycles : generators) out.push_back(Permutation::from_cycles(degree, cycles));
  return out;
}

CatalogEntry parse_catalog_entry(std::string_view line) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  if (!doc.is_object()) throw ParseError("catalog entry is not a JSON object");

  CatalogEntry entry;
  try {
    entry.name = doc.value("name", std::string{});
    if (!doc.contains("degree") || !doc.at("degree").is_number_unsigned())
      throw ParseError("catalog entry needs a non-negative integer \"degree\"");
    entry.degree = doc.at("degree").get<std::size_t>();
    if (entry.degree == 0) throw ParseError("catalog entry degree must be positive");
    if (!doc.contains("generators") || !doc.at("generators").is_array())
      throw ParseError("catalog entry needs a \"generators\" array");
    entry.generators = doc.at("generators").get<std::vector<std::vector<std::vector<Point>>>>();
    if (doc.contains("expected")) {
      if (!doc.at("expected").is_object()) throw ParseError("\"expected\" must be an object");
      entry.expected = doc.at("expected");
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad catalog field: ") + e.what());
  }
  try {
    (void)entry.permutations();
  } catch (const InvalidParameter& e) {
    throw ParseError(std::string("bad generator: ") + e.what());
  }
  return entry;
}

std::vector<std::variant<CatalogEntry, CatalogLineError>> read_catalog(std::istream& in) {
  std::vector<std::variant<CatalogEntry, CatalogLineError>> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.emplace_back(parse_catalog_entry(line));
    } catch (const ParseError& e) {
      out.emplace_back(CatalogLineError{number, e.what()});
    }
  }
  return out;
}

CatalogEntry load_permutation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open permutation file '" + path + "'");
  for (auto& item : read_catalog(in)) {
    if (auto* entry = std::get_if<CatalogEntry>(&item)) return std::move(*entry);
    const auto& err = std::get<CatalogLineError>(item);
    throw ParseError(path + ":" + std::to_string(err.line) + ": " + err.message);
  }
  throw ParseError("permutation file '" + path + "' has no entries");
}

}  // namespace cgl
