#include <algorithm>
#include <set>

#include "doctest.h"

#include "cgl/codegree.hpp"
#include "cgl/constructors.hpp"
#include "cgl/errors.hpp"
#include "support.hpp"

using namespace cgl;

namespace {

using Profile = std::map<std::uint64_t, std::uint64_t>;

Profile profile_of(const std::string& spec) {
  return codegree_profile(character_table(parse_spec(spec))).multiplicity;
}

Classification classify(const std::string& spec) {
  return classify_tkprime(codegree_profile(character_table(parse_spec(spec))));
}

std::vector<std::uint64_t> lattice_orders(const GroupElements& g) {
  std::vector<std::uint64_t> out;
  for (const auto& n : normal_subgroup_lattice(character_table(g), g)) out.push_back(n.order);
  return out;
}

/// Products of elements until nothing new appears.
std::vector<ElementIndex> closure(const GroupElements& g, std::vector<ElementIndex> elems) {
  std::vector<bool> in(g.order(), false);
  for (auto x : elems) in[x] = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (auto z : {g.multiply(elems[i], elems[j]), g.multiply(elems[j], elems[i])})
        if (!in[z]) {
          in[z] = true;
          elems.push_back(z);
        }
  std::sort(elems.begin(), elems.end());
  return elems;
}

/// Every normal subgroup is a join of class closures, so a search that adds
/// one class at a time reaches all of them.
std::set<std::vector<ElementIndex>> brute_force_normal_subgroups(const GroupElements& g) {
  const auto c = conjugacy_classes(g);
  std::set<std::vector<ElementIndex>> out{{0}};
  std::vector<std::vector<ElementIndex>> todo{{0}};
  while (!todo.empty()) {
    const auto n = todo.back();
    todo.pop_back();
    for (const auto& cls : c.members) {
      auto elems = n;
      elems.insert(elems.end(), cls.begin(), cls.end());
      std::sort(elems.begin(), elems.end());
      elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
      auto next = closure(g, elems);
      if (out.insert(next).second) todo.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("codegree profiles of small groups") {
  CHECK(profile_of("sym:4") == Profile{{1, 1}, {2, 1}, {3, 1}, {8, 2}});
  CHECK(profile_of("cyclic:4") == Profile{{1, 1}, {2, 1}, {4, 2}});
  CHECK(profile_of("psl2:5") == Profile{{1, 1}, {12, 1}, {15, 1}, {20, 2}});
  CHECK(profile_of("psl2:7") == Profile{{1, 1}, {21, 1}, {24, 1}, {28, 1}, {56, 2}});
  CHECK(profile_of("frobenius:2^3:7") == Profile{{1, 1}, {7, 6}, {8, 1}});
  CHECK(profile_of("dicyclic:3") == Profile{{1, 1}, {2, 1}, {3, 1}, {4, 2}, {6, 1}});
  CHECK(profile_of("direct:(cyclic:2)*(sym:3)") == Profile{{1, 1}, {2, 3}, {3, 1}, {6, 1}});
  CHECK(profile_of("dihedral:9") == Profile{{1, 1}, {2, 1}, {3, 1}, {9, 3}});
  CHECK(profile_of("c3c3q8") == Profile{{1, 1}, {2, 3}, {4, 1}, {9, 1}});
  CHECK(profile_of("alt:4") == Profile{{1, 1}, {3, 2}, {4, 1}});
  CHECK(profile_of("cyclic:1") == Profile{{1, 1}});
}

TEST_CASE("codegree is the index of the kernel over the degree") {
  for (const char* spec : {"sym:4", "psl2:7", "c3c3q8", "extraspecial:2^5:-", "frobenius:3^2:8"}) {
    const auto g = parse_spec(spec);
    const auto t = character_table(g);
    for (const auto& chi : t.characters) {
      std::uint64_t kernel = 0;
      for (ClassIndex c = 0; c < t.classes.count(); ++c)
        if (chi.values[c].is_degree(chi.degree)) kernel += t.classes.sizes[c];
      CHECK(kernel == chi.kernel_order);
      CHECK(codegree(chi, g.order()) * chi.degree * kernel == g.order());
    }
    CHECK(codegree_profile(t).total == t.characters.size());
  }
}

TEST_CASE("T'_k classification") {
  CHECK(classify("cyclic:1") == Classification{TkPrime{1, 1}});
  CHECK(classify("sym:3") == Classification{TkPrime{1, 3}});
  CHECK(classify("cyclic:2") == Classification{TkPrime{1, 2}});
  CHECK(classify("sym:4") == Classification{TkPrime{2, 8}});
  CHECK(classify("psl2:7") == Classification{TkPrime{2, 56}});
  CHECK(classify("dihedral:9") == Classification{TkPrime{3, 9}});
  CHECK(classify("elemab:3^2") == Classification{TkPrime{8, 3}});
  CHECK(classify("cyclic:6") == Classification{NotTkPrime{3, 6}});
  CHECK(classify("cyclic:9") == Classification{NotTkPrime{3, 9}});
  CHECK(classify("dihedral:10") == Classification{NotTkPrime{5, 10}});
  CHECK(classify("abelian:2x4") == Classification{NotTkPrime{2, 4}});
  // With three repeated codegrees the witness is the two largest.
  CodegreeProfile p;
  p.multiplicity = {{1, 1}, {2, 2}, {3, 2}, {5, 3}, {7, 1}};
  CHECK(classify_tkprime(p) == Classification{NotTkPrime{3, 5}});
}

TEST_CASE("T_k classification") {
  auto tk = [](const char* spec) { return classify_tk(degree_profile(character_table(parse_spec(spec)))); };
  CHECK(tk("psl2:5") == TkVerdict{Tk{2, 3}});
  CHECK(tk("sym:3") == TkVerdict{Tk{1, 2}});
  CHECK(tk("sym:4") == TkVerdict{Tk{2, 3}});
  CHECK(tk("cyclic:4") == TkVerdict{TkNotApplicable{}});
  CHECK(tk("psl2:7") == TkVerdict{Tk{2, 3}});
  CHECK(classify_tk({{1, 2}, {2, 2}, {3, 2}}) == TkVerdict{NotTk{2, 3}});
  CHECK(classify_tk({{1, 4}, {2, 1}, {3, 1}}) == TkVerdict{Tk{1, 3}});
}

TEST_CASE("dprime_n and distinct nonlinear degrees") {
  CHECK(dprime_n(character_table(symmetric(3))) == 0);
  CHECK(dprime_n(character_table(cyclic(2))) == 0);
  CHECK(dprime_n(character_table(symmetric(4))) == 1);
  CHECK(dprime_n(character_table(psl2(7))) == 1);
  CHECK(dprime_n(character_table(cyclic(1))) == 0);
  CHECK(is_d0_degrees(character_table(symmetric(3))));
  CHECK_FALSE(is_d0_degrees(character_table(symmetric(4))));
}

TEST_CASE("normal subgroup lattices") {
  CHECK(lattice_orders(symmetric(4)) == std::vector<std::uint64_t>{1, 4, 12, 24});
  CHECK(lattice_orders(psl2(5)) == std::vector<std::uint64_t>{1, 60});
  CHECK(lattice_orders(extraspecial(1, ExtraspecialSign::Minus)) == std::vector<std::uint64_t>{1, 2, 4, 4, 4, 8});
  CHECK(lattice_orders(cyclic(1)) == std::vector<std::uint64_t>{1});

  const auto q8 = normal_subgroup_lattice(character_table(extraspecial(1, ExtraspecialSign::Minus)),
                                          extraspecial(1, ExtraspecialSign::Minus));
  CHECK(q8.back().abelian == false);
  for (std::size_t i = 0; i + 1 < q8.size(); ++i) CHECK(q8[i].abelian == true);
  CHECK_FALSE(normal_subgroup_lattice(character_table(cyclic(3))).front().abelian.has_value());
}

TEST_CASE("lattice equals the brute-force normal subgroups") {
  std::vector<GroupElements> groups{symmetric(4), dicyclic(3), q8_on_c3c3(), extraspecial(2, ExtraspecialSign::Plus)};
  for (const auto& e : testing::shipped_catalog()) groups.push_back(testing::build(e));
  for (const auto& g : groups) {
    const auto t = character_table(g);
    std::set<std::vector<ElementIndex>> mine;
    for (const auto& n : normal_subgroup_lattice(t, g)) {
      CHECK(n.order == n.elements.size());
      mine.insert(n.elements);
    }
    CHECK(mine == brute_force_normal_subgroups(g));
  }
}

TEST_CASE("divisibility lemmas") {
  for (const char* spec : {"sym:4", "psl2:7", "c3c3q8", "dicyclic:3", "frobenius:2^3:7", "extraspecial:2^5:+"}) {
    const auto g = parse_spec(spec);
    const auto t = character_table(g);
    const auto lattice = normal_subgroup_lattice(t, g);
    CHECK(check_lemma_small_b(t, lattice).empty());
    CHECK(check_lemma_small_c(t, lattice).empty());
  }
  // Without the abelian hypothesis the first lemma fails: in S_3 the faithful
  // character has codegree 3, which K = G of order 6 does not divide.
  const auto s3 = symmetric(3);
  const auto t = character_table(s3);
  const auto lattice = normal_subgroup_lattice(t, s3);
  CHECK(check_lemma_small_b(t, lattice).empty());
  const auto all = check_lemma_small_b(t, lattice, LemmaScope::AllSubgroups);
  REQUIRE(all.size() == 1);
  CHECK(all[0].character == 2);
  CHECK(lattice[all[0].subgroup].order == 6);
  // Flags are required for the abelian scope.
  CHECK_THROWS_AS(check_lemma_small_b(t, normal_subgroup_lattice(t)), InvalidParameter);
  CHECK_NOTHROW(check_lemma_small_c(t, normal_subgroup_lattice(t), LemmaScope::AllSubgroups));
}

TEST_CASE("abelian codegrees are the element orders") {
  for (const char* spec : {"cyclic:12", "abelian:2x4", "elemab:3^3", "abelian:2x2x2x6", "cyclic:1"}) {
    const auto g = parse_spec(spec);
    CHECK(check_abelian_order_law(character_table(g), g));
  }
  CHECK_THROWS_AS(check_abelian_order_law(character_table(symmetric(3)), symmetric(3)), InvalidParameter);
}

TEST_CASE("odd dihedral groups") {
  for (std::uint64_t n : {3, 5, 7, 9, 15}) {
    const auto g = dihedral(n);
    CHECK(odd_dihedral_parameter(g) == n);
    CHECK(dihedral_codegree_count_check(n, character_table(g)));
  }
  CHECK_FALSE(odd_dihedral_parameter(dihedral(4)).has_value());
  CHECK_FALSE(odd_dihedral_parameter(cyclic(6)).has_value());
  CHECK_FALSE(odd_dihedral_parameter(dicyclic(3)).has_value());
  // A table from another group of the same order fails the count.
  CHECK_FALSE(dihedral_codegree_count_check(9, character_table(abelian({3, 6}))));
}

TEST_CASE("extraspecial 2-groups are recognized") {
  for (const char* spec : {"extraspecial:2^3:+", "extraspecial:2^3:-", "extraspecial:2^5:+", "extraspecial:2^5:-"})
    CHECK(is_extraspecial_2group(parse_spec(spec)));
  for (const char* spec : {"elemab:2^3", "cyclic:8", "dihedral:8", "abelian:2x4", "dicyclic:4", "cyclic:2", "sym:3"})
    CHECK_FALSE(is_extraspecial_2group(parse_spec(spec)));
}

TEST_CASE("theorem case matching") {
  auto match = [](const char* spec) {
    const auto g = parse_spec(spec);
    const auto t = character_table(g);
    return match_theorem_case(g, t, classify_tkprime(codegree_profile(t)));
  };
  CHECK(match("psl2:5") == TheoremCase::APsl2_5);
  CHECK(match("psl2:7") == TheoremCase::APsl2_7);
  CHECK(match("sym:4") == TheoremCase::B1);
  CHECK(match("cyclic:4") == TheoremCase::B1);
  CHECK(match("dicyclic:3") == TheoremCase::B1);
  CHECK(match("dihedral:9") == TheoremCase::B2);
  CHECK(match("c3c3q8") == TheoremCase::B2);
  CHECK(match("elemab:3^2") == TheoremCase::B3ElementaryAbelian);
  CHECK(match("cyclic:2") == TheoremCase::B3ElementaryAbelian);
  CHECK(match("extraspecial:2^5:+") == TheoremCase::B3Extraspecial2);
  CHECK(match("frobenius:2^3:7") == TheoremCase::B4);
  CHECK(match("frobenius:3^2:2") == TheoremCase::B5);
  CHECK(match("cyclic:6") == TheoremCase::NotTkPrimeConsistent);
  CHECK(match("cyclic:1") == TheoremCase::TrivialGroup);
  // Wrong verdicts for real groups land nowhere.
  const auto g = cyclic(5);
  CHECK(match_theorem_case(g, character_table(g), TkPrime{3, 5}) == TheoremCase::Unexpected);

  CHECK_FALSE(reference_profiles_b1().empty());
  CHECK_FALSE(reference_profiles_b2().empty());
  for (auto c : {TheoremCase::APsl2_5, TheoremCase::B3Extraspecial2, TheoremCase::NotTkPrimeConsistent,
                 TheoremCase::TrivialGroup, TheoremCase::Unexpected})
    CHECK(theorem_case_from_string(to_string(c)) == c);
  CHECK_THROWS_AS(theorem_case_from_string("B9"), ParseError);
}

TEST_CASE("T'_k groups of the families up to order 200 match a listed case") {
  for (const auto& spec : testing::family_specs_up_to_200()) {
    const auto g = parse_spec(spec);
    const auto t = character_table(g);
    const auto verdict = classify_tkprime(codegree_profile(t));
    INFO(spec);
    CHECK(match_theorem_case(g, t, verdict) != TheoremCase::Unexpected);
  }
}
