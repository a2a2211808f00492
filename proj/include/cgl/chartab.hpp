#pragma once

// Exact character tables by the Dixon-Schneider method.
//
// The class algebra is split over a prime p = 1 (mod exp G) into its
// one-dimensional simultaneous eigenspaces. Each eigenvector is the central
// character w_i = |C_i| chi(g_i) / chi(1) of one irreducible chi (mod p).
// Degrees follow from first orthogonality, and character values are lifted
// to multiplicity vectors over the e-th roots of unity by a discrete
// Fourier transform along each class's power map.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cgl/gfp.hpp"
#include "cgl/group.hpp"

namespace cgl {

/// chi(g) = sum_k mult[k] * zeta_e^k. Stored unreduced, length e.
struct CharacterValue {
  std::vector<std::uint32_t> mult;

  std::uint64_t total() const;
  /// True iff the value equals `degree` exactly, i.e. mult = (degree, 0, ..., 0).
  bool is_degree(std::uint64_t degree) const;
  auto operator<=>(const CharacterValue&) const = default;
};

struct Character {
  std::uint64_t degree = 0;
  std::vector<CharacterValue> values;  // one per class
  std::vector<ClassIndex> kernel_classes;
  std::uint64_t kernel_order = 0;
  bool faithful = false;
};

struct CharacterTable {
  std::uint64_t order = 0;
  ConjugacyClassData classes;
  std::uint64_t exponent = 1;
  std::uint64_t prime = 0;
  gfp::Residue zeta = 1;  // image of zeta_e in GF(prime)
  std::vector<Character> characters;  // principal first, then by degree

  std::vector<std::uint64_t> degrees() const;
};

/// Least prime p = 1 (mod exponent) with p > 2 * floor(sqrt(order)).
std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent);

/// Throws InvalidParameter unless p is usable as a Dixon prime for this group.
void require_dixon_prime(std::uint64_t p, std::uint64_t order, std::uint64_t exponent);

/// Supplies the class matrix of class i reduced mod p.
using ClassMatrixSource = std::function<gfp::FpMatrix(ClassIndex)>;

/// Simultaneous eigenvectors of the class matrices, each normalized to 1 at
/// the identity class. Matrices are used in class-index order until every
/// block is one-dimensional; InternalError if that never happens.
std::vector<gfp::Vector> omega_eigenvectors(std::size_t class_count, const ClassMatrixSource& source,
                                            std::uint64_t p);

/// d with d^2 = |G| / sum_i w_i w_i' / |C_i| (mod p), d in (0, p/2).
std::uint64_t degree_from_omega(const gfp::Vector& omega, const std::vector<std::size_t>& sizes,
                                const std::vector<ClassIndex>& inverse_class, std::uint64_t order,
                                std::uint64_t p);

/// `powers[i]` lists the classes of rep_i^l for l < rep_order[i].
std::vector<CharacterValue> lift_values(const gfp::Vector& omega, std::uint64_t degree,
                                        const ConjugacyClassData& classes,
                                        const std::vector<std::vector<ClassIndex>>& powers,
                                        std::uint64_t p, std::uint64_t e);

/// Full pipeline. `prime` overrides the Dixon prime.
CharacterTable character_table(const GroupElements& g, std::optional<std::uint64_t> prime = {});
CharacterTable character_table(const GroupElements& g, const ConjugacyClassData& classes,
                               std::optional<std::uint64_t> prime = {});

/// chi(g) mod p under zeta_e -> table.zeta.
gfp::Residue value_mod_p(const CharacterValue& v, gfp::Residue zeta, std::uint64_t p);

/// sum_i |C_i| chi_a(g_i) conj(chi_b(g_i)) in Z[x]/(Phi_e), low degree first, no trailing zeros.
gfp::IntPoly exact_inner_product(const CharacterTable& table, std::size_t a, std::size_t b);

struct OrthogonalityReport {
  bool rows_mod_p = true;
  bool columns_mod_p = true;
  bool rows_exact = true;
  std::vector<std::string> failures;

  bool ok() const { return rows_mod_p && columns_mod_p && rows_exact; }
};

OrthogonalityReport verify_orthogonality(const CharacterTable& table);

}  // namespace cgl
