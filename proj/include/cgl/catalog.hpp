#pragma once

// JSON-lines permutation-group catalogs. One object per line:
//   {"name":"S3","degree":3,"generators":[[[0,1]],[[0,1,2]]],
//    "expected":{"verdict":"TkPrime","k":1,"d0":3,"case":"B5"}}
// Each generator is a list of disjoint cycles; "expected" is optional and
// may carry any subset of its keys.

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cgl/permutation.hpp"

namespace cgl {

struct CatalogEntry {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::vector<std::vector<Point>>> generators;
  std::optional<nlohmann::json> expected;

  /// Throws InvalidParameter when cycles overlap or leave [0, degree).
  std::vector<Permutation> permutations() const;
};

/// Throws ParseError on malformed JSON or a bad field.
CatalogEntry parse_catalog_entry(std::string_view line);

struct CatalogLineError {
  std::size_t line;
  std::string message;
};

/// Blank lines and lines starting with '#' are skipped.
std::vector<std::variant<CatalogEntry, CatalogLineError>> read_catalog(std::istream& in);

/// First entry of a catalog file; used by the "perm:FILE" spec form.
CatalogEntry load_permutation_file(const std::string& path);

}  // namespace cgl
