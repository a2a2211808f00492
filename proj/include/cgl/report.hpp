#pragma once

// Reports and command implementations behind the codegree-lab CLI.
// Everything here writes data to the given stream and returns an exit code;
// diagnostics go to the separate error stream.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cgl/chartab.hpp"
#include "cgl/codegree.hpp"
#include "cgl/group.hpp"

namespace cgl {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kParse = 2;
inline constexpr int kCap = 3;
inline constexpr int kInternal = 4;
inline constexpr int kUnusableCatalog = 5;
}  // namespace exit_code

enum class OutputFormat { Text, Json };

struct RunOptions {
  OutputFormat format = OutputFormat::Text;
  std::size_t max_order = kDefaultOrderCap;
  std::optional<std::uint64_t> prime;
  bool timing = false;
  unsigned jobs = 1;
};

struct PropertyResults {
  bool sum_of_squares = true;
  OrthogonalityReport orthogonality;
  std::vector<LemmaViolation> lemma_small_b;
  std::vector<LemmaViolation> lemma_small_c;
  std::optional<bool> abelian_order_law;  // abelian groups only
  std::optional<std::uint64_t> dihedral_n;
  std::optional<bool> dihedral_count;     // odd dihedral groups only

  std::size_t violation_count() const;
};

struct Report {
  std::string name;
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;
  std::uint64_t prime = 0;
  std::vector<std::size_t> class_sizes;
  std::vector<std::uint64_t> class_orders;
  std::vector<std::uint64_t> degrees;
  std::vector<std::uint64_t> kernel_orders;
  std::vector<std::uint64_t> codegrees;
  CodegreeProfile profile;
  Classification classification;
  TkVerdict tk;
  std::uint64_t dprime_n = 0;
  bool d0_degrees = false;
  TheoremCase theorem_case = TheoremCase::Unexpected;
  std::optional<PropertyResults> properties;
  std::optional<double> elapsed_ms;
};

/// Runs the whole pipeline on g.
Report analyze(const std::string& name, const GroupElements& g, const RunOptions& options,
               bool with_properties);

std::string verdict_name(const Classification& c);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const TkVerdict& v);
nlohmann::json to_json(const PropertyResults& p);
nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

nlohmann::json table_to_json(const std::string& name, const CharacterTable& table);
std::string table_to_text(const std::string& name, const CharacterTable& table);

/// Human-readable cyclotomic value, e.g. "-1" style sums written as "E(3)+E(3)^2".
std::string format_value(const CharacterValue& v, std::uint64_t e);

/// Compares the keys present in an "expected" block (verdict, k, d0, witness, case).
/// Returns the list of mismatching keys.
std::vector<std::string> compare_expected(const Report& r, const nlohmann::json& expected);

struct TheoremExpectation {
  std::string spec;
  Classification verdict;
  TheoremCase theorem_case;
};

/// The classification checks, one entry per named group plus negative controls.
const std::vector<TheoremExpectation>& builtin_theorem_suite();

/// JSON lines {"spec":..., "verdict":"TkPrime","k":..,"d0":..,"case":..}
/// or {"spec":..., "verdict":"NotTkPrime","witness":[d1,d2],"case":..}. Throws ParseError.
std::vector<TheoremExpectation> parse_expectations(std::istream& in);

struct VerificationOutcome {
  TheoremExpectation expectation;
  std::optional<Report> report;
  std::string error;
  bool matched = false;
};

std::vector<VerificationOutcome> verify_theorem(const std::vector<TheoremExpectation>& suite,
                                                const RunOptions& options);

// Command entry points; return process exit codes.
int cmd_table(const std::string& spec, const RunOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_classify(const std::string& spec, const RunOptions& options, std::ostream& out,
                 std::ostream& err);
int cmd_verify_theorem(const std::vector<TheoremExpectation>& suite, const RunOptions& options,
                       std::ostream& out, std::ostream& err);
int cmd_scan(std::istream& catalog, const RunOptions& options, std::ostream& out, std::ostream& err);
int cmd_check_properties(std::istream& catalog, const RunOptions& options, std::ostream& out,
                         std::ostream& err);

}  // namespace cgl
