#pragma once

// Group families as permutation groups: natural actions where one exists,
// regular representations of multiplication tables otherwise.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cgl/gfp.hpp"
#include "cgl/group.hpp"

namespace cgl {

/// A group given by its full multiplication table.
struct TableGroup {
  std::vector<std::string> labels;
  std::vector<std::vector<ElementIndex>> table;  // table[a][b] = a*b
  ElementIndex identity = 0;
  std::vector<ElementIndex> generators;

  std::size_t order() const { return table.size(); }
  ElementIndex inverse(ElementIndex a) const;
  bool is_central(ElementIndex z) const;
  std::uint64_t element_order(ElementIndex a) const;
};

/// Checks identity, inverses and (for order <= 64) associativity; throws InvalidParameter.
void validate(const TableGroup& t);

/// Multiplication table of a permutation group, element indices preserved.
TableGroup table_from_group(const GroupElements& g);

/// Cayley embedding: each generator acts on element indices by left multiplication.
GroupElements regular_representation(const TableGroup& t, std::size_t cap = kDefaultOrderCap);

/// (A x B) / <(zA, zB)>; zA, zB must be central of order 2.
TableGroup central_product(const TableGroup& a, const TableGroup& b, ElementIndex za,
                           ElementIndex zb);

/// GF(p^degree) with a deterministic irreducible modulus and multiplicative generator.
/// Elements are encoded as integers sum c_i p^i over the coefficient vector.
class FieldGF {
 public:
  FieldGF(std::uint64_t p, unsigned degree);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return degree_; }
  std::uint64_t size() const { return size_; }
  const gfp::FpPoly& modulus() const { return modulus_; }
  std::uint64_t generator() const { return generator_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t multiplicative_order(std::uint64_t a) const;

  gfp::FpPoly to_poly(std::uint64_t a) const;
  std::uint64_t from_poly(const gfp::FpPoly& f) const;

 private:
  std::uint64_t p_;
  unsigned degree_;
  std::uint64_t size_;
  gfp::FpPoly modulus_;
  std::uint64_t generator_ = 0;
};

GroupElements cyclic(std::uint64_t n, std::size_t cap = kDefaultOrderCap);
GroupElements elementary_abelian(std::uint64_t p, unsigned beta, std::size_t cap = kDefaultOrderCap);
/// Direct product of cyclic factors on disjoint point sets.
GroupElements abelian(const std::vector<std::uint64_t>& factors, std::size_t cap = kDefaultOrderCap);

/// Order 2n.
GroupElements dihedral(std::uint64_t n, std::size_t cap = kDefaultOrderCap);
/// Order 4n: <a, b | a^(2n), b^2 = a^n, b a b^-1 = a^-1>.
TableGroup dicyclic_table(std::uint64_t n);
GroupElements dicyclic(std::uint64_t n, std::size_t cap = kDefaultOrderCap);
GroupElements symmetric(std::uint64_t n, std::size_t cap = kDefaultOrderCap);
GroupElements alternating(std::uint64_t n, std::size_t cap = kDefaultOrderCap);

/// C_p^beta : C_m acting on GF(p^beta) by translations and by multiplication
/// with the order-m power of the field's generator. Requires m | p^beta - 1, m >= 2.
GroupElements frobenius_field(std::uint64_t p, unsigned beta, std::uint64_t m,
                              std::size_t cap = kDefaultOrderCap);

/// The two matrices over GF(3) generating Q_8 used by q8_on_c3c3.
std::vector<std::array<std::array<int, 2>, 2>> q8_matrix_generators();

/// Affine action of Q_8 <= SL(2,3) on GF(3)^2; order 72.
GroupElements q8_on_c3c3(std::size_t cap = kDefaultOrderCap);

enum class ExtraspecialSign { Plus, Minus };

/// Order 2^(2n+1): central product of n copies of D_8 (plus) or Q_8 with n-1 copies of D_8 (minus).
TableGroup extraspecial_table(unsigned n, ExtraspecialSign sign);
GroupElements extraspecial(unsigned n, ExtraspecialSign sign, std::size_t cap = kDefaultOrderCap);

/// PSL(2, q) on the projective line, q prime >= 5; point q is infinity.
GroupElements psl2(std::uint64_t q, std::size_t cap = kDefaultOrderCap);

/// A acts on points [0, deg A), B on [deg A, deg A + deg B).
GroupElements direct_product(const GroupElements& a, const GroupElements& b,
                             std::size_t cap = kDefaultOrderCap);

// ---------------------------------------------------------------------------
// Group spec strings, e.g. "frobenius:3^2:2" or "direct:(cyclic:2)*(sym:3)".

enum class Family {
  Cyclic,
  ElementaryAbelian,
  Abelian,
  Dihedral,
  Dicyclic,
  Symmetric,
  Alternating,
  Frobenius,
  Extraspecial,
  Psl2,
  C3C3Q8,
  Direct,
  PermFile,
};

struct GroupSpec {
  Family family;
  std::vector<std::uint64_t> params;
  bool minus = false;  // extraspecial sign
  std::string path;    // perm:FILE
  std::vector<GroupSpec> factors;

  /// Normalized spec text; parsing it yields an equal spec.
  std::string canonical() const;
};

/// Syntax and family-constraint checking; throws ParseError with a position.
GroupSpec parse_group_spec(std::string_view text);

GroupElements build_group(const GroupSpec& spec, std::size_t cap = kDefaultOrderCap);

GroupElements parse_spec(std::string_view text, std::size_t cap = kDefaultOrderCap);

}  // namespace cgl
