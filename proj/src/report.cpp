#include "cgl/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>
#include <type_traits>
#include <utility>

#include "cgl/catalog.hpp"
#include "cgl/constructors.hpp"
#include "cgl/errors.hpp"

namespace cgl {

using nlohmann::json;

namespace {

// Runs fn(i) for i < n on up to `jobs` threads. fn must not throw.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t n, unsigned jobs, Fn fn) {
  std::vector<R> out(n);
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

// Maps the library's exceptions onto exit codes, writing the message to err.
template <typename Fn>
int guarded(std::ostream& err, Fn fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kParse;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kParse;
  } catch (const ClosureExceedsCap& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kCap;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::kInternal;
  }
}

std::string profile_text(const CodegreeProfile& p) {
  std::string s = "{";
  bool first = true;
  for (const auto& [d, m] : p.multiplicity) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(d) + ":" + std::to_string(m);
  }
  return s + "}";
}

template <typename T>
std::string joined(const std::vector<T>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string classification_text(const Classification& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, TkPrime>)
          return "TkPrime(" + std::to_string(v.k) + "," + std::to_string(v.d0) + ")";
        else
          return "NotTkPrime(" + std::to_string(v.d1) + "," + std::to_string(v.d2) + ")";
      },
      c);
}

std::string tk_text(const TkVerdict& t) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Tk>)
          return "Tk(" + std::to_string(v.k) + "," + std::to_string(v.d0) + ")";
        else if constexpr (std::is_same_v<V, NotTk>)
          return "NotTk(" + std::to_string(v.d1) + "," + std::to_string(v.d2) + ")";
        else
          return "not applicable (abelian)";
      },
      t);
}

json violations_json(const std::vector<LemmaViolation>& vs) {
  json arr = json::array();
  for (const auto& v : vs)
    arr.push_back({{"character", v.character}, {"subgroup", v.subgroup}, {"detail", v.detail}});
  return arr;
}

std::uint64_t need_u64(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_unsigned())
    throw ParseError(std::string("expectation needs a non-negative integer \"") + key + "\"");
  return doc.at(key).get<std::uint64_t>();
}

std::pair<std::uint64_t, std::uint64_t> need_witness(const json& doc) {
  if (!doc.contains("witness") || !doc.at("witness").is_array() || doc.at("witness").size() != 2 ||
      !doc.at("witness")[0].is_number_unsigned() || !doc.at("witness")[1].is_number_unsigned())
    throw ParseError("expectation needs \"witness\": [d1, d2]");
  return {doc.at("witness")[0].get<std::uint64_t>(), doc.at("witness")[1].get<std::uint64_t>()};
}

std::string render(const Report& r, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(r).dump() + "\n";
  return to_text(r);
}

}  // namespace

std::size_t PropertyResults::violation_count() const {
  std::size_t n = lemma_small_b.size() + lemma_small_c.size();
  if (!sum_of_squares) ++n;
  if (!orthogonality.ok()) ++n;
  if (abelian_order_law && !*abelian_order_law) ++n;
  if (dihedral_count && !*dihedral_count) ++n;
  return n;
}

Report analyze(const std::string& name, const GroupElements& g, const RunOptions& options,
               bool with_properties) {
  const auto start = std::chrono::steady_clock::now();
  const auto table = character_table(g, conjugacy_classes(g), options.prime);

  Report r;
  r.name = name;
  r.order = table.order;
  r.exponent = table.exponent;
  r.prime = table.prime;
  r.class_sizes = table.classes.sizes;
  r.class_orders = table.classes.rep_order;
  r.degrees = table.degrees();
  for (const auto& chi : table.characters) {
    r.kernel_orders.push_back(chi.kernel_order);
    r.codegrees.push_back(codegree(chi, table.order));
  }
  r.profile = codegree_profile(table);
  r.classification = classify_tkprime(r.profile);
  r.tk = classify_tk(degree_profile(table));
  r.dprime_n = dprime_n(table);
  r.d0_degrees = is_d0_degrees(table);
  r.theorem_case = match_theorem_case(g, table, r.classification);

  if (with_properties) {
    PropertyResults p;
    std::uint64_t squares = 0;
    for (auto d : r.degrees) squares += d * d;
    p.sum_of_squares = squares == r.order;
    p.orthogonality = verify_orthogonality(table);
    const auto lattice = normal_subgroup_lattice(table, g);
    p.lemma_small_b = check_lemma_small_b(table, lattice);
    p.lemma_small_c = check_lemma_small_c(table, lattice);
    if (g.is_abelian()) p.abelian_order_law = check_abelian_order_law(table, g);
    if (auto n = odd_dihedral_parameter(g)) {
      p.dihedral_n = *n;
      p.dihedral_count = dihedral_codegree_count_check(*n, table);
    }
    r.properties = std::move(p);
  }
  if (options.timing) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                       .count();
  }
  return r;
}

std::string verdict_name(const Classification& c) {
  return std::holds_alternative<TkPrime>(c) ? "TkPrime" : "NotTkPrime";
}

json to_json(const Classification& c) {
  if (const auto* t = std::get_if<TkPrime>(&c)) return {{"verdict", "TkPrime"}, {"k", t->k}, {"d0", t->d0}};
  const auto& n = std::get<NotTkPrime>(c);
  return {{"verdict", "NotTkPrime"}, {"witness", {n.d1, n.d2}}};
}

json to_json(const TkVerdict& v) {
  if (const auto* t = std::get_if<Tk>(&v)) return {{"verdict", "Tk"}, {"k", t->k}, {"d0", t->d0}};
  if (const auto* n = std::get_if<NotTk>(&v))
    return {{"verdict", "NotTk"}, {"witness", {n->d1, n->d2}}};
  return {{"verdict", "NotApplicable"}};
}

json to_json(const PropertyResults& p) {
  json doc;
  doc["sum_of_squares"] = p.sum_of_squares;
  doc["orthogonality"] = {{"rows_mod_p", p.orthogonality.rows_mod_p},
                          {"columns_mod_p", p.orthogonality.columns_mod_p},
                          {"rows_exact", p.orthogonality.rows_exact},
                          {"failures", p.orthogonality.failures}};
  doc["lemma_small_b"] = violations_json(p.lemma_small_b);
  doc["lemma_small_c"] = violations_json(p.lemma_small_c);
  if (p.abelian_order_law) doc["abelian_order_law"] = *p.abelian_order_law;
  if (p.dihedral_n) doc["dihedral"] = {{"n", *p.dihedral_n}, {"ok", p.dihedral_count.value_or(false)}};
  doc["violations"] = p.violation_count();
  return doc;
}

json to_json(const Report& r) {
  json doc;
  doc["name"] = r.name;
  doc["order"] = r.order;
  doc["exponent"] = r.exponent;
  doc["prime"] = r.prime;
  json classes = json::array();
  for (std::size_t i = 0; i < r.class_sizes.size(); ++i)
    classes.push_back({{"order", r.class_orders[i]}, {"size", r.class_sizes[i]}});
  doc["classes"] = classes;
  doc["degrees"] = r.degrees;
  doc["kernel_orders"] = r.kernel_orders;
  doc["codegrees"] = r.codegrees;
  json profile = json::array();
  for (const auto& [d, m] : r.profile.multiplicity) profile.push_back({d, m});
  doc["profile"] = profile;
  doc["classification"] = to_json(r.classification);
  doc["tk"] = to_json(r.tk);
  doc["dprime_n"] = r.dprime_n;
  doc["d0_degrees"] = r.d0_degrees;
  doc["case"] = to_string(r.theorem_case);
  if (r.properties) doc["properties"] = to_json(*r.properties);
  if (r.elapsed_ms) doc["elapsed_ms"] = *r.elapsed_ms;
  return doc;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "group       " << r.name << '\n'
     << "order       " << r.order << "  (exponent " << r.exponent << ", prime " << r.prime << ")\n"
     << "classes     " << r.class_sizes.size() << "  orders " << joined(r.class_orders) << "  sizes "
     << joined(r.class_sizes) << '\n'
     << "degrees     " << joined(r.degrees) << '\n'
     << "kernels     " << joined(r.kernel_orders) << '\n'
     << "codegrees   " << joined(r.codegrees) << '\n'
     << "profile     " << profile_text(r.profile) << '\n'
     << "T'_k        " << classification_text(r.classification) << '\n'
     << "T_k         " << tk_text(r.tk) << '\n'
     << "D'_n        n=" << r.dprime_n << (r.d0_degrees ? "  (D_0 degrees)" : "") << '\n'
     << "case        " << to_string(r.theorem_case) << '\n';
  if (r.properties) {
    const auto& p = *r.properties;
    os << "properties  " << p.violation_count() << " violation(s)\n";
    os << "  sum of squares   " << (p.sum_of_squares ? "ok" : "FAIL") << '\n';
    os << "  orthogonality    " << (p.orthogonality.ok() ? "ok" : "FAIL") << '\n';
    for (const auto& f : p.orthogonality.failures) os << "    " << f << '\n';
    os << "  lemma (b) sweep  " << (p.lemma_small_b.empty() ? "ok" : "FAIL") << '\n';
    for (const auto& v : p.lemma_small_b) os << "    " << v.detail << '\n';
    os << "  lemma (c) sweep  " << (p.lemma_small_c.empty() ? "ok" : "FAIL") << '\n';
    for (const auto& v : p.lemma_small_c) os << "    " << v.detail << '\n';
    if (p.abelian_order_law)
      os << "  abelian law      " << (*p.abelian_order_law ? "ok" : "FAIL") << '\n';
    if (p.dihedral_n)
      os << "  dihedral n=" << *p.dihedral_n << "     " << (p.dihedral_count.value_or(false) ? "ok" : "FAIL")
         << '\n';
  }
  if (r.elapsed_ms) os << "elapsed     " << *r.elapsed_ms << " ms\n";
  return os.str();
}

std::string format_value(const CharacterValue& v, std::uint64_t e) {
  // Rational values print as plain integers.
  gfp::IntPoly poly(v.mult.begin(), v.mult.end());
  poly = gfp::poly_rem_monic(std::move(poly), gfp::cyclotomic_polynomial(static_cast<unsigned>(e)));
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  if (poly.size() <= 1) return std::to_string(poly.empty() ? 0 : poly[0]);

  // zeta_e^j = zeta_n^k with n = e / gcd(e, j); roots 1 and -1 fold into the integer part.
  std::int64_t integer = 0;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> terms;
  for (std::uint64_t j = 0; j < v.mult.size(); ++j) {
    if (v.mult[j] == 0) continue;
    const std::uint64_t g = std::gcd(e, j);
    const std::uint64_t n = e / g;
    if (n == 1)
      integer += v.mult[j];
    else if (n == 2)
      integer -= v.mult[j];
    else
      terms[{n, j / g}] += v.mult[j];
  }
  std::string s;
  for (const auto& [root, c] : terms) {
    if (!s.empty()) s += "+";
    if (c > 1) s += std::to_string(c) + "*";
    s += "E(" + std::to_string(root.first) + ")";
    if (root.second != 1) s += "^" + std::to_string(root.second);
  }
  if (integer != 0 || s.empty()) {
    if (s.empty())
      s = std::to_string(integer);
    else
      s += (integer > 0 ? "+" : "") + std::to_string(integer);
  }
  return s;
}

json table_to_json(const std::string& name, const CharacterTable& table) {
  json doc;
  doc["name"] = name;
  doc["order"] = table.order;
  doc["exponent"] = table.exponent;
  doc["prime"] = table.prime;
  doc["zeta_mod_p"] = table.zeta;
  json classes = json::array();
  for (std::size_t i = 0; i < table.classes.count(); ++i)
    classes.push_back({{"order", table.classes.rep_order[i]},
                       {"size", table.classes.sizes[i]},
                       {"inverse", table.classes.inverse_class[i]}});
  doc["classes"] = classes;
  json chars = json::array();
  for (const auto& chi : table.characters) {
    json values = json::array();
    for (const auto& v : chi.values) values.push_back(v.mult);
    chars.push_back({{"degree", chi.degree},
                     {"kernel_order", chi.kernel_order},
                     {"faithful", chi.faithful},
                     {"codegree", codegree(chi, table.order)},
                     {"values", values}});
  }
  doc["characters"] = chars;
  return doc;
}

std::string table_to_text(const std::string& name, const CharacterTable& table) {
  const std::size_t nc = table.classes.count();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"", "order", "size"};
  for (std::size_t i = 0; i < nc; ++i) header.push_back(std::to_string(table.classes.rep_order[i]));
  header.push_back("deg");
  header.push_back("ker");
  header.push_back("cod");
  cells.push_back(header);
  std::vector<std::string> sizes{"", "", ""};
  for (std::size_t i = 0; i < nc; ++i) sizes.push_back(std::to_string(table.classes.sizes[i]));
  sizes.insert(sizes.end(), {"", "", ""});
  cells.push_back(sizes);
  for (std::size_t c = 0; c < table.characters.size(); ++c) {
    const auto& chi = table.characters[c];
    std::vector<std::string> row{"X." + std::to_string(c + 1), "", ""};
    for (const auto& v : chi.values) row.push_back(format_value(v, table.exponent));
    row.push_back(std::to_string(chi.degree));
    row.push_back(std::to_string(chi.kernel_order));
    row.push_back(std::to_string(codegree(chi, table.order)));
    cells.push_back(std::move(row));
  }
  // Column 1 and 2 label the class rows; reuse them for the header captions.
  cells[0][0] = "class";
  cells[0][1] = "";
  cells[0][2] = "";
  cells[1][0] = "size";
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

  std::ostringstream os;
  os << name << "  order " << table.order << "  classes " << nc << "  exponent " << table.exponent
     << "  prime " << table.prime << '\n';
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i == 1 || i == 2) continue;  // spacer columns
      if (!line.empty()) line += "  ";
      line += std::string(width[i] - row[i].size(), ' ') + row[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::vector<std::string> compare_expected(const Report& r, const json& expected) {
  std::vector<std::string> bad;
  const auto* tkp = std::get_if<TkPrime>(&r.classification);
  const auto* ntk = std::get_if<NotTkPrime>(&r.classification);
  for (const auto& [key, value] : expected.items()) {
    bool ok = false;
    if (key == "verdict")
      ok = value.is_string() && value.get<std::string>() == verdict_name(r.classification);
    else if (key == "k")
      ok = tkp && value.is_number_unsigned() && value.get<std::uint64_t>() == tkp->k;
    else if (key == "d0")
      ok = tkp && value.is_number_unsigned() && value.get<std::uint64_t>() == tkp->d0;
    else if (key == "witness")
      ok = ntk && value == json{ntk->d1, ntk->d2};
    else if (key == "case")
      ok = value.is_string() && value.get<std::string>() == to_string(r.theorem_case);
    else if (key == "order")
      ok = value.is_number_unsigned() && value.get<std::uint64_t>() == r.order;
    else if (key == "dprime_n")
      ok = value.is_number_unsigned() && value.get<std::uint64_t>() == r.dprime_n;
    else {
      bad.push_back(key + " (unknown key)");
      continue;
    }
    if (!ok) bad.push_back(key);
  }
  return bad;
}

const std::vector<TheoremExpectation>& builtin_theorem_suite() {
  static const std::vector<TheoremExpectation> suite = [] {
    using C = TheoremCase;
    std::vector<TheoremExpectation> s{
        {"psl2:5", TkPrime{2, 20}, C::APsl2_5},
        {"psl2:7", TkPrime{2, 56}, C::APsl2_7},
        {"cyclic:4", TkPrime{2, 4}, C::B1},
        {"sym:4", TkPrime{2, 8}, C::B1},
        {"frobenius:5^1:4", TkPrime{2, 4}, C::B1},
        {"dicyclic:3", TkPrime{2, 4}, C::B1},
        {"direct:(cyclic:2)*(sym:3)", TkPrime{3, 2}, C::B2},
        {"dihedral:9", TkPrime{3, 9}, C::B2},
        {"c3c3q8", TkPrime{3, 2}, C::B2},
    };
    for (auto [p, beta] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 1}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < beta; ++i) q *= p;
      s.push_back({"elemab:" + std::to_string(p) + "^" + std::to_string(beta), TkPrime{q - 1, p},
                   C::B3ElementaryAbelian});
    }
    for (unsigned k : {3u, 5u}) {
      const std::uint64_t central_quotient = std::uint64_t{1} << (k - 1);
      for (const char* sign : {"+", "-"})
        s.push_back({"extraspecial:2^" + std::to_string(k) + ":" + sign,
                     TkPrime{central_quotient - 1, 2}, C::B3Extraspecial2});
    }
    for (unsigned beta : {2u, 3u, 5u}) {
      const std::uint64_t q = std::uint64_t{1} << beta;
      s.push_back({"frobenius:2^" + std::to_string(beta) + ":" + std::to_string(q - 1),
                   TkPrime{q - 2, q - 1}, C::B4});
    }
    for (auto [p, beta] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < beta; ++i) q *= p;
      s.push_back({"frobenius:" + std::to_string(p) + "^" + std::to_string(beta) + ":2",
                   TkPrime{(q - 1) / 2, p}, C::B5});
    }
    s.push_back({"cyclic:6", NotTkPrime{3, 6}, C::NotTkPrimeConsistent});
    s.push_back({"cyclic:9", NotTkPrime{3, 9}, C::NotTkPrimeConsistent});
    s.push_back({"dihedral:10", NotTkPrime{5, 10}, C::NotTkPrimeConsistent});
    s.push_back({"abelian:2x4", NotTkPrime{2, 4}, C::NotTkPrimeConsistent});
    return s;
  }();
  return suite;
}

std::vector<TheoremExpectation> parse_expectations(std::istream& in) {
  std::vector<TheoremExpectation> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string where = "expectations line " + std::to_string(number) + ": ";
    try {
      const json doc = json::parse(line);
      if (!doc.is_object() || !doc.contains("spec") || !doc.at("spec").is_string())
        throw ParseError("needs a \"spec\" string");
      if (!doc.contains("case") || !doc.at("case").is_string()) throw ParseError("needs a \"case\" string");
      TheoremExpectation e;
      e.spec = doc.at("spec").get<std::string>();
      (void)parse_group_spec(e.spec);
      e.theorem_case = theorem_case_from_string(doc.at("case").get<std::string>());
      const std::string verdict = doc.value("verdict", std::string{});
      if (verdict == "TkPrime") {
        e.verdict = TkPrime{need_u64(doc, "k"), need_u64(doc, "d0")};
      } else if (verdict == "NotTkPrime") {
        const auto [d1, d2] = need_witness(doc);
        e.verdict = NotTkPrime{d1, d2};
      } else {
        throw ParseError("\"verdict\" must be TkPrime or NotTkPrime");
      }
      out.push_back(std::move(e));
    } catch (const json::exception& ex) {
      throw ParseError(where + ex.what());
    } catch (const ParseError& ex) {
      throw ParseError(where + ex.what());
    }
  }
  return out;
}

std::vector<VerificationOutcome> verify_theorem(const std::vector<TheoremExpectation>& suite,
                                                const RunOptions& options) {
  return parallel_map<VerificationOutcome>(suite.size(), options.jobs, [&](std::size_t i) {
    VerificationOutcome o;
    o.expectation = suite[i];
    try {
      const auto g = parse_spec(suite[i].spec, options.max_order);
      o.report = analyze(suite[i].spec, g, options, false);
      o.matched = o.report->classification == suite[i].verdict &&
                  o.report->theorem_case == suite[i].theorem_case &&
                  o.report->theorem_case != TheoremCase::Unexpected;
    } catch (const std::exception& e) {
      o.error = e.what();
    }
    return o;
  });
}

int cmd_table(const std::string& spec, const RunOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto g = parse_spec(spec, options.max_order);
    const auto table = character_table(g, options.prime);
    if (options.format == OutputFormat::Json)
      out << table_to_json(spec, table).dump() << '\n';
    else
      out << table_to_text(spec, table);
    return exit_code::kOk;
  });
}

int cmd_classify(const std::string& spec, const RunOptions& options, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const auto g = parse_spec(spec, options.max_order);
    out << render(analyze(spec, g, options, false), options.format);
    return exit_code::kOk;
  });
}

int cmd_verify_theorem(const std::vector<TheoremExpectation>& suite, const RunOptions& options,
                       std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto outcomes = verify_theorem(suite, options);
    std::size_t failed = 0;
    json results = json::array();
    for (const auto& o : outcomes) {
      if (!o.matched) ++failed;
      const std::string expected =
          classification_text(o.expectation.verdict) + " " + to_string(o.expectation.theorem_case);
      std::string got = o.error.empty()
                            ? classification_text(o.report->classification) + " " +
                                  to_string(o.report->theorem_case)
                            : "error: " + o.error;
      if (options.format == OutputFormat::Json) {
        json item;
        item["spec"] = o.expectation.spec;
        item["matched"] = o.matched;
        item["expected"] = to_json(o.expectation.verdict);
        item["expected"]["case"] = to_string(o.expectation.theorem_case);
        if (o.report) {
          item["report"] = to_json(*o.report);
        } else {
          item["error"] = o.error;
        }
        results.push_back(std::move(item));
      } else {
        out << (o.matched ? "PASS  " : "FAIL  ") << o.expectation.spec << "  " << got;
        if (!o.matched) out << "  (expected " << expected << ")";
        out << '\n';
      }
      if (!o.matched) err << "mismatch: " << o.expectation.spec << ": got " << got << ", expected "
                          << expected << '\n';
    }
    if (options.format == OutputFormat::Json) {
      out << json{{"results", results}, {"passed", outcomes.size() - failed}, {"failed", failed}}.dump()
          << '\n';
    } else {
      out << (outcomes.size() - failed) << "/" << outcomes.size() << " cases match\n";
    }
    return failed == 0 ? exit_code::kOk : exit_code::kMismatch;
  });
}

namespace {

struct EntryResult {
  std::string text;        // rendered data for stdout
  std::string diagnostic;  // for stderr
  bool usable = false;
  bool mismatch = false;
};

int run_catalog(std::istream& catalog, const RunOptions& options, std::ostream& out,
                std::ostream& err, bool properties) {
  const auto items = read_catalog(catalog);
  auto results = parallel_map<EntryResult>(items.size(), options.jobs, [&](std::size_t i) {
    EntryResult res;
    if (const auto* bad = std::get_if<CatalogLineError>(&items[i])) {
      res.diagnostic = "warning: catalog line " + std::to_string(bad->line) + " skipped: " + bad->message;
      return res;
    }
    const auto& entry = std::get<CatalogEntry>(items[i]);
    try {
      const auto g = generate(entry.degree, entry.permutations(), options.max_order);
      const auto report = analyze(entry.name, g, options, properties);
      res.usable = true;
      std::vector<std::string> problems;
      if (entry.expected) problems = compare_expected(report, *entry.expected);
      if (properties && report.properties->violation_count() > 0)
        problems.push_back(std::to_string(report.properties->violation_count()) + " property violation(s)");
      if (!problems.empty()) {
        res.mismatch = true;
        res.diagnostic = "mismatch: " + entry.name + ":";
        for (const auto& p : problems) res.diagnostic += " " + p;
      }
      if (options.format == OutputFormat::Json) {
        json doc = to_json(report);
        if (entry.expected) doc["expected_mismatches"] = problems;
        res.text = doc.dump() + "\n";
      } else {
        res.text = to_text(report) + "\n";
      }
    } catch (const std::exception& e) {
      res.diagnostic = "warning: entry '" + entry.name + "' skipped: " + e.what();
    }
    return res;
  });

  std::size_t usable = 0;
  bool mismatch = false;
  for (const auto& r : results) {
    out << r.text;
    if (!r.diagnostic.empty()) err << r.diagnostic << '\n';
    usable += r.usable;
    mismatch = mismatch || r.mismatch;
  }
  if (!results.empty() && usable == 0) return exit_code::kUnusableCatalog;
  return mismatch ? exit_code::kMismatch : exit_code::kOk;
}

}  // namespace

int cmd_scan(std::istream& catalog, const RunOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return run_catalog(catalog, options, out, err, false); });
}

int cmd_check_properties(std::istream& catalog, const RunOptions& options, std::ostream& out,
                         std::ostream& err) {
  return guarded(err, [&] { return run_catalog(catalog, options, out, err, true); });
}

}  // namespace cgl
