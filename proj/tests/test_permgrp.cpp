#include <algorithm>
#include <numeric>
#include <sstream>

#include "doctest.h"

#include "cgl/constructors.hpp"
#include "cgl/errors.hpp"
#include "cgl/group.hpp"
#include "support.hpp"

using namespace cgl;

namespace {

GroupElements s3() {
  return generate(3, std::vector<Permutation>{Permutation({1, 0, 2}), Permutation({1, 2, 0})});
}

std::vector<std::size_t> sorted_sizes(const ConjugacyClassData& c) {
  auto s = c.sizes;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("compose evaluates the right factor first") {
  CHECK(compose(Permutation({1, 2, 0}), Permutation({1, 0, 2})) == Permutation({2, 1, 0}));
  CHECK(compose(Permutation::identity(3), Permutation({1, 0, 2})) == Permutation({1, 0, 2}));
  CHECK(compose(Permutation({1, 0, 2}), Permutation({1, 0, 2})) == Permutation::identity(3));
}

TEST_CASE("permutation construction is validated") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidParameter);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), InvalidParameter);
  CHECK_THROWS_AS(Permutation::from_cycles(4, {{0, 1}, {1, 2}}), InvalidParameter);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 5}}), InvalidParameter);
  CHECK(Permutation::from_cycles(4, {{0, 1, 2, 3}}) == Permutation({1, 2, 3, 0}));
}

TEST_CASE("cycles, inverse and printing") {
  const auto p = Permutation::from_cycles(6, {{4, 5}, {0, 2, 1}});
  CHECK(p.cycles() == std::vector<std::vector<Point>>{{0, 2, 1}, {4, 5}});
  CHECK(compose(p, p.inverse()).is_identity());
  std::ostringstream os;
  os << p << ' ' << Permutation::identity(3);
  CHECK(os.str() == "(0,2,1)(4,5) ()");
  CHECK(p.extended(8).degree() == 8);
  CHECK(p.extended(8)(7) == 7);
}

TEST_CASE("element orders") {
  CHECK(element_order(Permutation::identity(4)) == 1);
  CHECK(element_order(Permutation::from_cycles(4, {{0, 1, 2, 3}})) == 4);
  CHECK(element_order(Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}})) == 6);
  const auto c = Permutation::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}});
  CHECK(power(c, 7).is_identity());
  CHECK(power(c, 3) == compose(c, compose(c, c)));
}

TEST_CASE("closure examples") {
  CHECK(s3().order() == 6);
  CHECK(generate(std::vector<Permutation>{}).order() == 1);
  CHECK(generate(std::vector<Permutation>{Permutation::from_cycles(4, {{0, 1, 2, 3}})}).order() == 4);
  const auto g = s3();
  CHECK(g.element(0).is_identity());
  for (ElementIndex i = 0; i < g.order(); ++i) {
    CHECK(g.index_of(g.element(i)) == i);
    CHECK(g.multiply(i, g.inverse(i)) == 0);
  }
  CHECK(g.index_of(Permutation({0, 1, 2, 3})) == g.order());
}

TEST_CASE("closure respects the cap") {
  CHECK_THROWS_AS(symmetric(6, 100), ClosureExceedsCap);
  CHECK_NOTHROW(symmetric(5, 120));
  CHECK_THROWS_AS(symmetric(5, 119), ClosureExceedsCap);
}

TEST_CASE("exponent and element order multisets") {
  CHECK(exponent(symmetric(4)) == 12);
  CHECK(exponent(psl2(7)) == 84);
  CHECK(exponent(elementary_abelian(3, 2)) == 3);
  CHECK(element_order_multiset(cyclic(4)) == std::vector<std::uint64_t>{1, 2, 4, 4});
  CHECK(element_order_multiset(cyclic(6)) == std::vector<std::uint64_t>{1, 2, 3, 3, 6, 6});
  CHECK(element_order_multiset(elementary_abelian(2, 3)) ==
        std::vector<std::uint64_t>{1, 2, 2, 2, 2, 2, 2, 2});
}

TEST_CASE("conjugacy class sizes") {
  CHECK(conjugacy_classes(s3()).sizes == std::vector<std::size_t>{1, 3, 2});
  CHECK(sorted_sizes(conjugacy_classes(symmetric(4))) == std::vector<std::size_t>{1, 3, 6, 6, 8});
  CHECK(sorted_sizes(conjugacy_classes(alternating(5))) == std::vector<std::size_t>{1, 12, 12, 15, 20});
}

TEST_CASE("conjugacy classes agree with conjugation by every element") {
  std::vector<GroupElements> groups{symmetric(4), psl2(5), dicyclic(5), frobenius_field(2, 3, 7), q8_on_c3c3(),
                                    extraspecial(2, ExtraspecialSign::Minus)};
  for (const auto& e : testing::shipped_catalog()) groups.push_back(testing::build(e));
  for (const auto& g : groups) {
    const auto c = conjugacy_classes(g);
    std::set<std::vector<ElementIndex>> mine(c.members.begin(), c.members.end());
    CHECK(mine == testing::brute_force_classes(g));

    CHECK(c.sizes[0] == 1);
    CHECK(c.reps[0] == 0);
    for (ClassIndex i = 0; i < c.count(); ++i) {
      CHECK(c.reps[i] == c.members[i].front());
      CHECK(c.sizes[i] == c.members[i].size());
      CHECK(g.order() % c.sizes[i] == 0);
      CHECK(c.rep_order[i] == element_order(g.element(c.reps[i])));
      CHECK(c.class_of[g.inverse(c.reps[i])] == c.inverse_class[i]);
      for (auto x : c.members[i]) CHECK(c.class_of[x] == i);
      if (i > 1) {
        const auto a = std::tuple(c.rep_order[i - 1], c.sizes[i - 1], c.reps[i - 1]);
        const auto b = std::tuple(c.rep_order[i], c.sizes[i], c.reps[i]);
        CHECK(a < b);
      }
    }
  }
}

TEST_CASE("power maps") {
  const auto g = s3();
  const auto c = conjugacy_classes(g);
  CHECK(power_map(g, c, 0) == std::vector<ClassIndex>{0, 0, 0});
  CHECK(power_map(g, c, 1) == std::vector<ClassIndex>{0, 1, 2});
  CHECK(power_map(g, c, 2) == std::vector<ClassIndex>{0, 0, 2});
  CHECK(power_classes(g, c, 2) == std::vector<ClassIndex>{0, 2, 2});

  const auto a5 = alternating(5);
  const auto ca = conjugacy_classes(a5);
  // Squaring swaps the two classes of 5-cycles.
  const auto sq = power_map(a5, ca, 2);
  CHECK(sq[3] == 4);
  CHECK(sq[4] == 3);
}

TEST_CASE("class matrices") {
  const auto g = s3();
  const auto c = conjugacy_classes(g);
  const auto t = class_matrix(g, c, 1);
  CHECK(t.entries[1] == std::vector<std::uint64_t>{3, 0, 3});
  const auto id = class_matrix(g, c, 0);
  for (std::size_t j = 0; j < c.count(); ++j)
    for (std::size_t k = 0; k < c.count(); ++k) CHECK(id.entries[j][k] == (j == k ? 1u : 0u));
}

TEST_CASE("class matrices match a direct count of products") {
  for (const auto& g : {symmetric(4), dicyclic(3), psl2(5)}) {
    const auto c = conjugacy_classes(g);
    for (ClassIndex i = 0; i < c.count(); ++i) {
      const auto m = class_matrix(g, c, i);
      for (ClassIndex j = 0; j < c.count(); ++j)
        for (ClassIndex k = 0; k < c.count(); ++k) {
          // a_ijk = #{(x, y) in C_i x C_j : xy = rep_k}
          std::uint64_t n = 0;
          for (auto x : c.members[i])
            for (auto y : c.members[j])
              if (g.multiply(x, y) == c.reps[k]) ++n;
          CHECK(m.entries[j][k] == n);
        }
    }
  }
}

TEST_CASE("centre and derived subgroup") {
  CHECK(center(symmetric(4)).size() == 1);
  CHECK(derived_subgroup(symmetric(4)).size() == 12);
  CHECK(derived_subgroup(cyclic(9)).size() == 1);
  CHECK(center(dicyclic(3)).size() == 2);
  CHECK(derived_subgroup(psl2(7)).size() == 168);
  const auto e = extraspecial(2, ExtraspecialSign::Plus);
  CHECK(center(e) == derived_subgroup(e));
}

TEST_CASE("derived subgroup matches the closure of all commutators") {
  for (const auto& entry : testing::shipped_catalog()) {
    const auto g = testing::build(entry);
    std::vector<ElementIndex> comms;
    for (ElementIndex x = 0; x < g.order(); ++x)
      for (ElementIndex y = 0; y < g.order(); ++y)
        comms.push_back(g.multiply(g.multiply(g.inverse(x), g.inverse(y)), g.multiply(x, y)));
    CHECK(derived_subgroup(g) == subgroup_closure(g, comms));
  }
}
