#pragma once

// Shared fixtures: the family specs swept by the property tests, and
// brute-force oracles that share no code with the library's fast paths.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cgl/catalog.hpp"
#include "cgl/chartab.hpp"
#include "cgl/constructors.hpp"
#include "cgl/group.hpp"

namespace cgl::testing {

/// Every built-in family instance of order <= 200 exercised by the sweeps.
inline std::vector<std::string> family_specs_up_to_200() {
  std::vector<std::string> s;
  for (int n = 1; n <= 24; ++n) s.push_back("cyclic:" + std::to_string(n));
  for (const char* x : {"elemab:2^2", "elemab:2^3", "elemab:2^4", "elemab:2^5", "elemab:2^6",
                        "elemab:2^7", "elemab:3^2", "elemab:3^3", "elemab:3^4", "elemab:5^2",
                        "elemab:7^2", "elemab:11^2", "elemab:13^2"})
    s.push_back(x);
  for (const char* x : {"abelian:2x4", "abelian:2x6", "abelian:3x9", "abelian:4x4", "abelian:2x2x4",
                        "abelian:2x4x8", "abelian:6x6", "abelian:2x2x2x6", "abelian:5x10"})
    s.push_back(x);
  for (int n = 1; n <= 30; ++n) s.push_back("dihedral:" + std::to_string(n));
  for (int n : {45, 49, 75, 99}) s.push_back("dihedral:" + std::to_string(n));
  for (int n = 1; n <= 12; ++n) s.push_back("dicyclic:" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) s.push_back("sym:" + std::to_string(n));
  for (int n = 3; n <= 5; ++n) s.push_back("alt:" + std::to_string(n));
  for (const char* x :
       {"frobenius:3^1:2", "frobenius:5^1:2", "frobenius:5^1:4", "frobenius:7^1:2", "frobenius:7^1:3",
        "frobenius:7^1:6", "frobenius:11^1:5", "frobenius:11^1:10", "frobenius:13^1:3",
        "frobenius:13^1:4", "frobenius:13^1:6", "frobenius:13^1:12", "frobenius:2^2:3",
        "frobenius:2^3:7", "frobenius:2^4:3", "frobenius:2^4:5", "frobenius:3^2:2",
        "frobenius:3^2:4", "frobenius:3^2:8", "frobenius:5^2:2", "frobenius:5^2:3", "frobenius:5^2:6",
        "frobenius:3^3:2", "frobenius:17^1:8", "frobenius:19^1:9"})
    s.push_back(x);
  for (const char* x : {"extraspecial:2^3:+", "extraspecial:2^3:-", "extraspecial:2^5:+",
                        "extraspecial:2^5:-", "extraspecial:2^7:+", "extraspecial:2^7:-"})
    s.push_back(x);
  for (const char* x : {"psl2:5", "psl2:7", "c3c3q8", "direct:(cyclic:2)*(sym:3)",
                        "direct:(sym:3)*(sym:3)", "direct:(alt:4)*(cyclic:3)",
                        "direct:(dicyclic:3)*(cyclic:4)", "direct:(dihedral:4)*(dihedral:4)",
                        "direct:(sym:4)*(cyclic:2)", "direct:(extraspecial:2^3:-)*(cyclic:3)",
                        "direct:(frobenius:5^1:4)*(sym:3)", "direct:(psl2:5)*(cyclic:3)"})
    s.push_back(x);
  return s;
}

inline std::string data_path(const std::string& file) { return std::string(CGL_DATA_DIR) + "/" + file; }

inline std::vector<CatalogEntry> shipped_catalog() {
  std::ifstream in(data_path("small_groups.jsonl"));
  std::vector<CatalogEntry> out;
  for (auto& item : read_catalog(in))
    if (auto* e = std::get_if<CatalogEntry>(&item)) out.push_back(std::move(*e));
  return out;
}

inline GroupElements build(const CatalogEntry& e) { return generate(e.degree, e.permutations()); }

/// Conjugacy classes by conjugating with every element, as sorted element sets.
inline std::set<std::vector<ElementIndex>> brute_force_classes(const GroupElements& g) {
  std::set<std::vector<ElementIndex>> out;
  std::vector<bool> seen(g.order(), false);
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<ElementIndex> cls;
    for (ElementIndex y = 0; y < g.order(); ++y) {
      const auto c = g.index_of(compose(compose(g.element(y).inverse(), g.element(x)), g.element(y)));
      cls.insert(c);
      seen[c] = true;
    }
    out.insert({cls.begin(), cls.end()});
  }
  return out;
}

/// |C_G(x)| by testing every element.
inline std::uint64_t centralizer_order(const GroupElements& g, ElementIndex x) {
  std::uint64_t n = 0;
  for (ElementIndex y = 0; y < g.order(); ++y)
    if (compose(g.element(x), g.element(y)) == compose(g.element(y), g.element(x))) ++n;
  return n;
}

/// Multiplicity vector of m * zeta_e^j.
inline std::vector<std::uint32_t> unit(std::uint64_t e, std::uint64_t j, std::uint32_t m = 1) {
  std::vector<std::uint32_t> v(e, 0);
  v[j % e] = m;
  return v;
}

/// Irr(G) for abelian G by brute force: every homomorphism G -> Z_e, found by
/// choosing images of the generators and propagating along products. Each
/// character is returned as its row of values on the given classes.
inline std::set<std::vector<std::vector<std::uint32_t>>> character_group(const GroupElements& g,
                                                                         const ConjugacyClassData& classes) {
  const auto e = exponent(g);
  const auto& gens = g.generator_indices();
  std::set<std::vector<std::vector<std::uint32_t>>> out;
  std::vector<std::uint64_t> choice(gens.size(), 0);
  while (true) {
    std::vector<std::int64_t> value(g.order(), -1);
    value[0] = 0;
    std::vector<ElementIndex> queue{0};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      const auto x = queue[q];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto y = g.multiply(x, gens[i]);
        const auto v = static_cast<std::int64_t>((value[x] + choice[i]) % e);
        if (value[y] < 0) {
          value[y] = v;
          queue.push_back(y);
        } else if (value[y] != v) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::vector<std::vector<std::uint32_t>> row;
      for (ClassIndex c = 0; c < classes.count(); ++c) row.push_back(unit(e, value[classes.reps[c]]));
      out.insert(row);
    }
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == e) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return out;
}

/// Multisets of (k - linear) degrees >= 2 dividing n whose squares sum to n - linear.
inline std::vector<std::vector<std::uint64_t>> degree_candidates(std::uint64_t n, std::size_t k,
                                                                 std::size_t linear) {
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur;
  auto rec = [&](auto&& self, std::size_t start, std::uint64_t left, std::size_t count) -> void {
    if (count == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < divs.size() && divs[i] * divs[i] <= left; ++i) {
      cur.push_back(divs[i]);
      self(self, i, left - divs[i] * divs[i], count - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, n - linear, k - linear);
  return out;
}

}  // namespace cgl::testing
