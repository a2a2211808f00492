// codegree-lab: character tables, codegree profiles and T'_k classification
// of finite permutation groups.

#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "cgl/errors.hpp"
#include "cgl/report.hpp"

namespace {

int with_catalog(const std::string& path, std::ostream& err,
                 const std::function<int(std::istream&)>& run) {
  if (path == "-") return run(std::cin);
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open catalog '" << path << "'\n";
    return cgl::exit_code::kUnusableCatalog;
  }
  return run(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character tables and codegree classification of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  cgl::RunOptions options;
  std::string format = "text";
  std::uint64_t prime = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--max-order", options.max_order, "Refuse groups with more elements")
      ->capture_default_str();
  app.add_option("--prime", prime, "Override the Dixon prime");
  app.add_flag("--timing", options.timing, "Include wall time in reports");
  app.add_option("--jobs", jobs, "Worker threads for scan and verify-theorem")
      ->check(CLI::PositiveNumber);

  std::string spec;
  auto* table = app.add_subcommand("table", "Print the character table of a group");
  table->add_option("spec", spec, "Group spec, e.g. sym:4 or perm:FILE")->required();
  auto* classify = app.add_subcommand("classify", "Codegree profile and T'_k classification");
  classify->add_option("spec", spec, "Group spec")->required();

  std::string expectations;
  auto* verify = app.add_subcommand("verify-theorem", "Check the built-in classification suite");
  verify->add_option("--expectations", expectations,
                     "JSON-lines file replacing the built-in expectations");

  std::string catalog;
  auto* scan = app.add_subcommand("scan", "Classify every entry of a catalog");
  scan->add_option("catalog", catalog, "JSON-lines catalog, or - for stdin")->required();
  auto* props = app.add_subcommand("check-properties", "Run the property sweeps over a catalog");
  props->add_option("catalog", catalog, "JSON-lines catalog, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cgl::exit_code::kParse;
  }

  options.format = format == "json" ? cgl::OutputFormat::Json : cgl::OutputFormat::Text;
  if (prime != 0) options.prime = prime;
  options.jobs = jobs;

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*table) return cgl::cmd_table(spec, options, out, err);
  if (*classify) return cgl::cmd_classify(spec, options, out, err);
  if (*verify) {
    if (expectations.empty()) return cgl::cmd_verify_theorem(cgl::builtin_theorem_suite(), options, out, err);
    std::ifstream in(expectations);
    if (!in) {
      err << "error: cannot open expectations '" << expectations << "'\n";
      return cgl::exit_code::kParse;
    }
    try {
      return cgl::cmd_verify_theorem(cgl::parse_expectations(in), options, out, err);
    } catch (const cgl::Error& e) {
      err << "error: " << e.what() << '\n';
      return cgl::exit_code::kParse;
    }
  }
  if (*scan)
    return with_catalog(catalog, err, [&](std::istream& in) { return cgl::cmd_scan(in, options, out, err); });
  return with_catalog(catalog, err,
                      [&](std::istream& in) { return cgl::cmd_check_properties(in, options, out, err); });
}
