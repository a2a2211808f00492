#include <algorithm>
#include <cstdio>
#include <fstream>

#include "doctest.h"

#include "cgl/chartab.hpp"
#include "cgl/constructors.hpp"
#include "cgl/errors.hpp"
#include "support.hpp"

using namespace cgl;

namespace {

std::size_t count_order(const GroupElements& g, std::uint64_t o) {
  const auto m = element_order_multiset(g);
  return static_cast<std::size_t>(std::count(m.begin(), m.end(), o));
}

}  // namespace

TEST_CASE("abelian families") {
  CHECK(cyclic(4).order() == 4);
  CHECK(exponent(cyclic(4)) == 4);
  CHECK(elementary_abelian(3, 2).order() == 9);
  CHECK(exponent(elementary_abelian(3, 2)) == 3);
  const auto a = abelian({2, 3});
  CHECK(a.order() == 6);
  CHECK(element_order_multiset(a) == std::vector<std::uint64_t>{1, 2, 3, 3, 6, 6});
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(1).degree() >= 1);
}

TEST_CASE("dihedral, dicyclic, symmetric, alternating") {
  const auto d9 = dihedral(9);
  CHECK(d9.order() == 18);
  CHECK(conjugacy_classes(d9).count() == 6);
  CHECK(dihedral(1).order() == 2);
  CHECK(dihedral(2).order() == 4);
  CHECK(exponent(dihedral(2)) == 2);

  const auto dic = dicyclic(3);
  CHECK(dic.order() == 12);
  CHECK(exponent(dic) == 12);
  CHECK(count_order(dic, 2) == 1);
  CHECK(dic.degree() == 12);
  for (std::uint64_t n = 1; n <= 8; ++n) {
    CHECK(dicyclic(n).order() == 4 * n);
    CHECK(count_order(dicyclic(n), 2) == 1);
  }

  CHECK(symmetric(4).order() == 24);
  CHECK(symmetric(1).order() == 1);
  CHECK(alternating(5).order() == 60);
  CHECK(alternating(4).order() == 12);
}

TEST_CASE("table groups") {
  const auto t = dicyclic_table(3);
  CHECK_NOTHROW(validate(t));
  CHECK(t.order() == 12);
  const auto g = regular_representation(t);
  CHECK(g.order() == 12);
  CHECK(g.degree() == 12);

  auto broken = t;
  std::swap(broken.table[1][2], broken.table[1][3]);
  CHECK_THROWS_AS(validate(broken), InvalidParameter);

  const auto s = table_from_group(symmetric(3));
  CHECK_NOTHROW(validate(s));
  CHECK(regular_representation(s).order() == 6);
}

TEST_CASE("central products") {
  const auto d8 = table_from_group(dihedral(4));
  auto central_involution = [](const TableGroup& t) {
    for (ElementIndex z = 0; z < t.order(); ++z)
      if (z != t.identity && t.is_central(z) && t.element_order(z) == 2) return z;
    return t.identity;
  };
  const auto z = central_involution(d8);
  const auto prod = central_product(d8, d8, z, z);
  CHECK(prod.order() == 32);
  CHECK_NOTHROW(validate(prod));
  // The identity is not an involution; a non-central involution is rejected too.
  CHECK_THROWS_AS(central_product(d8, d8, d8.identity, z), InvalidParameter);
  ElementIndex reflection = 0;
  for (ElementIndex x = 0; x < d8.order(); ++x)
    if (d8.element_order(x) == 2 && !d8.is_central(x)) reflection = x;
  CHECK_THROWS_AS(central_product(d8, d8, reflection, z), InvalidParameter);
}

TEST_CASE("extraspecial groups") {
  const auto plus1 = extraspecial(1, ExtraspecialSign::Plus);
  const auto minus1 = extraspecial(1, ExtraspecialSign::Minus);
  CHECK(plus1.order() == 8);
  CHECK(minus1.order() == 8);
  CHECK(count_order(plus1, 2) == 5);  // D_8
  CHECK(count_order(minus1, 2) == 1); // Q_8

  for (auto sign : {ExtraspecialSign::Plus, ExtraspecialSign::Minus}) {
    const auto e = extraspecial(2, sign);
    CHECK(e.order() == 32);
    CHECK(center(e).size() == 2);
    CHECK(exponent(e) == 4);
    const auto t = character_table(e);
    std::vector<std::uint64_t> nonlinear;
    for (auto d : t.degrees())
      if (d > 1) nonlinear.push_back(d);
    CHECK(nonlinear == std::vector<std::uint64_t>{4});
  }
  // 2^{1+4}_+ has 19 involutions and 2^{1+4}_- has 11.
  CHECK(count_order(extraspecial(2, ExtraspecialSign::Plus), 2) == 19);
  CHECK(count_order(extraspecial(2, ExtraspecialSign::Minus), 2) == 11);
  CHECK(extraspecial(3, ExtraspecialSign::Minus).order() == 128);
}

TEST_CASE("finite fields") {
  for (auto [p, deg] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 3}, {2, 5}, {3, 2}, {5, 2}, {7, 1}}) {
    const FieldGF f(p, deg);
    CHECK(f.modulus().size() == deg + 1);
    CHECK(f.modulus().back() == 1);
    CHECK(gfp::fp_poly_is_irreducible(f.modulus(), p));
    CHECK(f.multiplicative_order(f.generator()) == f.size() - 1);
    // Every smaller element fails to generate.
    for (std::uint64_t a = 1; a < f.generator(); ++a) CHECK(f.multiplicative_order(a) < f.size() - 1);
    // Field axioms on all pairs.
    for (std::uint64_t a = 0; a < f.size(); ++a) {
      CHECK(f.from_poly(f.to_poly(a)) == a);
      if (a != 0) CHECK(f.pow(a, f.size() - 1) == 1);
      for (std::uint64_t b = 0; b < f.size(); ++b) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.add(a, b) == f.add(b, a));
      }
    }
  }
}

TEST_CASE("frobenius groups") {
  CHECK(frobenius_field(5, 1, 4).order() == 20);
  CHECK(frobenius_field(2, 3, 7).order() == 56);
  const auto f = frobenius_field(3, 2, 2);
  CHECK(f.order() == 18);
  // x -> -x negates both coordinates of a + 3b.
  std::vector<Point> neg(9);
  for (Point a = 0; a < 3; ++a)
    for (Point b = 0; b < 3; ++b) neg[a + 3 * b] = (3 - a) % 3 + 3 * ((3 - b) % 3);
  CHECK(f.contains(Permutation(neg)));
  CHECK(frobenius_field(2, 5, 31).order() == 992);
  CHECK_THROWS_AS(frobenius_field(5, 1, 3), InvalidParameter);
  CHECK_THROWS_AS(frobenius_field(6, 1, 5), InvalidParameter);
  // Only the identity fixes two points.
  const auto g = frobenius_field(7, 1, 3);
  for (const auto& x : g.elements()) {
    if (x.is_identity()) continue;
    int fixed = 0;
    for (Point i = 0; i < x.degree(); ++i) fixed += x(i) == i;
    CHECK(fixed <= 1);
  }
}

TEST_CASE("Q8 on C3 x C3 and PSL(2, q)") {
  CHECK(q8_matrix_generators().size() == 2);
  const auto g = q8_on_c3c3();
  CHECK(g.order() == 72);
  CHECK(g.degree() == 9);
  CHECK(psl2(5).order() == 60);
  CHECK(psl2(7).order() == 168);
  CHECK(psl2(11).order() == 660);
  CHECK(derived_subgroup(psl2(5)).size() == 60);
  CHECK_THROWS_AS(psl2(4), InvalidParameter);
}

TEST_CASE("direct products") {
  const auto g = direct_product(cyclic(2), symmetric(3));
  CHECK(g.order() == 12);
  CHECK(g.degree() == 5);
  CHECK(center(g).size() == 2);
}

TEST_CASE("group spec strings") {
  CHECK(parse_spec("frobenius:3^2:2").order() == 18);
  CHECK(parse_spec("direct:(cyclic:2)*(sym:3)").order() == 12);
  CHECK(parse_spec("direct:(direct:(cyclic:2)*(cyclic:2))*(cyclic:3)").order() == 12);
  CHECK(parse_spec("extraspecial:2^5:-").order() == 32);
  CHECK(parse_spec("abelian:2x2x3").order() == 12);
  CHECK(parse_spec("c3c3q8").order() == 72);
  CHECK(parse_spec("alt:5").order() == 60);
  CHECK(parse_spec("dicyclic:3").order() == 12);
  CHECK(parse_spec("elemab:2^3").order() == 8);

  for (const char* text : {"cyclic:12", "elemab:3^2", "abelian:2x4", "dihedral:9", "dicyclic:3", "sym:4", "alt:5",
                           "frobenius:5^1:4", "extraspecial:2^3:+", "extraspecial:2^5:-", "psl2:7", "c3c3q8",
                           "direct:(cyclic:2)*(sym:3)"}) {
    const auto spec = parse_group_spec(text);
    CHECK(spec.canonical() == text);
    CHECK(parse_group_spec(spec.canonical()).canonical() == spec.canonical());
  }
}

TEST_CASE("group spec errors carry positions") {
  auto position_of = [](const char* text) {
    try {
      (void)parse_group_spec(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::size_t{12345};
  };
  CHECK(position_of("foo:3") == 0);
  CHECK(position_of("cyclic:") == 7);
  CHECK(position_of("cyclic:0") == 7);
  CHECK(position_of("cyclic:3x") == 8);
  CHECK(position_of("elemab:4^2") == 7);
  CHECK(position_of("direct:(cyclic:2)") == 17);
  CHECK(position_of("extraspecial:2^4:+") != 12345);
  CHECK(position_of("extraspecial:2^1:+") != 12345);
  CHECK(position_of("frobenius:5^1:3") != 12345);
  CHECK(position_of("psl2:3") != 12345);
  CHECK(position_of("cyclic:99999999999999999999") == 7);
  CHECK(position_of("") != 12345);
  CHECK_THROWS_AS(parse_spec("sym:9"), ClosureExceedsCap);
  CHECK_THROWS_AS(parse_spec("cyclic:100", 50), ClosureExceedsCap);
}

TEST_CASE("perm: specs read the first catalog entry of a file") {
  const std::string path = "perm_spec_test.jsonl";
  {
    std::ofstream out(path);
    out << "# S3\n{\"name\":\"S3\",\"degree\":3,\"generators\":[[[0,1]],[[0,1,2]]]}\n";
  }
  CHECK(parse_spec("perm:" + path).order() == 6);
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_spec("perm:" + path), ParseError);
}
