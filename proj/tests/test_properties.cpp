// Invariants that must hold for every group, swept over the built-in
// families up to order 200 and the shipped catalog.

#include <numeric>

#include "doctest.h"

#include "cgl/codegree.hpp"
#include "cgl/constructors.hpp"
#include "support.hpp"

using namespace cgl;

namespace {

struct Case {
  std::string name;
  GroupElements group;
};

std::vector<Case> sweep() {
  std::vector<Case> out;
  for (const auto& spec : testing::family_specs_up_to_200()) out.push_back({spec, parse_spec(spec)});
  for (const auto& e : testing::shipped_catalog()) out.push_back({e.name, testing::build(e)});
  return out;
}

const std::vector<Case>& cases() {
  static const auto c = sweep();
  return c;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("every family spec stays within order 200") {
  for (const auto& spec : testing::family_specs_up_to_200()) CHECK(parse_spec(spec).order() <= 200);
}

TEST_CASE("table shape, degrees and orthogonality") {
  for (const auto& [name, g] : cases()) {
    INFO(name);
    const auto t = character_table(g);
    CHECK(t.characters.size() == t.classes.count());
    std::uint64_t squares = 0;
    for (const auto& chi : t.characters) {
      squares += chi.degree * chi.degree;
      CHECK(g.order() % chi.degree == 0);
      CHECK(g.order() % chi.kernel_order == 0);
    }
    CHECK(squares == g.order());
    const auto report = verify_orthogonality(t);
    CHECK(report.ok());
    // Linear characters count |G : G'|.
    std::uint64_t linear = 0;
    for (const auto& chi : t.characters) linear += chi.degree == 1;
    CHECK(linear * derived_subgroup(g).size() == g.order());
  }
}

TEST_CASE("codegree invariants") {
  for (const auto& [name, g] : cases()) {
    INFO(name);
    const auto t = character_table(g);
    const auto profile = codegree_profile(t);
    CHECK(profile.total == t.characters.size());
    CHECK(profile.multiplicity.begin()->first == 1);
    CHECK(profile.multiplicity.begin()->second == 1);
    CHECK(dprime_n(t) + profile.multiplicity.size() == t.characters.size());
    for (const auto& chi : t.characters) {
      const auto c = codegree(chi, g.order());
      CHECK(g.order() % c == 0);
      // chi(1) divides |G : ker chi|, so the codegree exceeds 1 unless chi is principal.
      CHECK((c == 1) == (chi.kernel_order == g.order()));
    }
    // Every prime dividing |G| divides some codegree.
    for (auto p : prime_factors(g.order())) {
      bool found = false;
      for (const auto& [d, m] : profile.multiplicity) found = found || d % p == 0;
      CHECK(found);
    }
  }
}

TEST_CASE("divisibility lemmas over abelian normal subgroups") {
  for (const auto& [name, g] : cases()) {
    INFO(name);
    const auto t = character_table(g);
    const auto lattice = normal_subgroup_lattice(t, g);
    CHECK(lattice.front().order == 1);
    CHECK(lattice.back().order == g.order());
    CHECK(check_lemma_small_b(t, lattice).empty());
    CHECK(check_lemma_small_c(t, lattice).empty());
  }
}

TEST_CASE("abelian groups: codegrees are element orders") {
  std::size_t checked = 0;
  for (const auto& [name, g] : cases()) {
    if (!g.is_abelian()) continue;
    INFO(name);
    CHECK(check_abelian_order_law(character_table(g), g));
    ++checked;
  }
  CHECK(checked > 40);
}

TEST_CASE("odd dihedral groups: phi(d)/2 degree-2 characters of codegree d") {
  std::size_t checked = 0;
  for (const auto& [name, g] : cases()) {
    const auto n = odd_dihedral_parameter(g);
    if (!n) continue;
    INFO(name);
    CHECK(dihedral_codegree_count_check(*n, character_table(g)));
    ++checked;
  }
  CHECK(checked >= 18);
}

TEST_CASE("classification is stable and lands on a listed case") {
  for (const auto& [name, g] : cases()) {
    INFO(name);
    const auto t = character_table(g);
    const auto a = classify_tkprime(codegree_profile(t));
    const auto b = classify_tkprime(codegree_profile(character_table(g)));
    CHECK(a == b);
    CHECK(match_theorem_case(g, t, a) != TheoremCase::Unexpected);
  }
}
