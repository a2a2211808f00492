#pragma once

// Codegrees cod(chi) = |G : ker chi| / chi(1) and what is built on them:
// multiplicity profiles, the T'_k / T_k / D'_n classifications, the normal
// subgroup lattice from kernel intersections, lemma sweeps, and matching a
// classified group against the known list of T'_k-groups.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cgl/chartab.hpp"
#include "cgl/group.hpp"

namespace cgl {

std::uint64_t codegree(const Character& chi, std::uint64_t order);

/// d -> number of irreducible characters with codegree d.
struct CodegreeProfile {
  std::map<std::uint64_t, std::uint64_t> multiplicity;
  std::uint64_t total = 0;

  bool operator==(const CodegreeProfile&) const = default;
};

CodegreeProfile codegree_profile(const CharacterTable& table);

/// d -> number of irreducible characters of degree d.
std::map<std::uint64_t, std::uint64_t> degree_profile(const CharacterTable& table);

// T'_k verdict.
struct TkPrime {
  std::uint64_t k;
  std::uint64_t d0;
  bool operator==(const TkPrime&) const = default;
};
struct NotTkPrime {
  std::uint64_t d1;
  std::uint64_t d2;
  bool operator==(const NotTkPrime&) const = default;
};
using Classification = std::variant<TkPrime, NotTkPrime>;

/// At most one codegree repeated: TkPrime with d0 the repeated codegree (or,
/// when nothing repeats, k = 1 and d0 the largest codegree). Otherwise
/// NotTkPrime witnessed by the two largest repeated codegrees.
Classification classify_tkprime(const CodegreeProfile& profile);

// T_k verdict over nontrivial degrees.
struct Tk {
  std::uint64_t k;
  std::uint64_t d0;
  bool operator==(const Tk&) const = default;
};
struct NotTk {
  std::uint64_t d1;
  std::uint64_t d2;
  bool operator==(const NotTk&) const = default;
};
struct TkNotApplicable {
  bool operator==(const TkNotApplicable&) const = default;
};
using TkVerdict = std::variant<Tk, NotTk, TkNotApplicable>;

/// Same tie-breaks as classify_tkprime, degree 1 ignored.
TkVerdict classify_tk(const std::map<std::uint64_t, std::uint64_t>& degrees);

/// |Irr(G)| - |cod(G)|.
std::uint64_t dprime_n(const CharacterTable& table);

/// Nonlinear degrees pairwise distinct.
bool is_d0_degrees(const CharacterTable& table);

struct NormalSubgroup {
  std::vector<ClassIndex> classes;
  std::vector<ElementIndex> elements;  // ascending
  std::uint64_t order = 0;
  std::optional<bool> abelian;  // known only when the lattice was built with the group
};

/// All intersections of character kernels (every normal subgroup arises this way),
/// sorted by order then by class list. Contains 1 and G.
std::vector<NormalSubgroup> normal_subgroup_lattice(const CharacterTable& table);
/// Same, with `abelian` filled in.
std::vector<NormalSubgroup> normal_subgroup_lattice(const CharacterTable& table,
                                                    const GroupElements& g);

/// Which K the lemma sweeps range over. The divisibility lemma needs K abelian
/// (its proof divides |I:K| by the degree of a character over a linear one);
/// for non-abelian K it fails already in S_3 with K = G.
enum class LemmaScope { AbelianSubgroups, AllSubgroups };

struct LemmaViolation {
  std::size_t character;
  std::size_t subgroup;  // index into the lattice
  std::string detail;
};

/// ker chi meets K trivially => |K| divides cod(chi), for every nontrivial K in scope.
/// AbelianSubgroups throws InvalidParameter if the lattice lacks abelian flags.
std::vector<LemmaViolation> check_lemma_small_b(const CharacterTable& table,
                                                const std::vector<NormalSubgroup>& lattice,
                                                LemmaScope scope = LemmaScope::AbelianSubgroups);

/// chi faithful, K nontrivial proper => cod(chi) != p for every prime p dividing |G|/|K|.
std::vector<LemmaViolation> check_lemma_small_c(const CharacterTable& table,
                                                const std::vector<NormalSubgroup>& lattice,
                                                LemmaScope scope = LemmaScope::AbelianSubgroups);

/// Multiset of codegrees equals the multiset of element orders. Throws
/// InvalidParameter for non-abelian G.
bool check_abelian_order_law(const CharacterTable& table, const GroupElements& g);

/// For the dihedral group of order 2n, n odd >= 3: every divisor d > 1 of n is
/// the codegree of exactly phi(d)/2 degree-2 characters.
bool dihedral_codegree_count_check(std::uint64_t n, const CharacterTable& table);

/// n when g is the dihedral group of order 2n with n odd >= 3 (an element of
/// order n and exactly n involutions), nullopt otherwise.
std::optional<std::uint64_t> odd_dihedral_parameter(const GroupElements& g);

enum class TheoremCase {
  APsl2_5,
  APsl2_7,
  B1,
  B2,
  B3ElementaryAbelian,
  B3Extraspecial2,
  B4,
  B5,
  NotTkPrimeConsistent,
  TrivialGroup,  // T'_1 with d0 = 1; outside the classification's list
  Unexpected,
};

std::string to_string(TheoremCase c);
/// Inverse of to_string; throws ParseError.
TheoremCase theorem_case_from_string(const std::string& s);

/// Structural facts behind extraspecial detection.
bool is_extraspecial_2group(const GroupElements& g);

/// First structural clause of the classification that fits a T'_k verdict;
/// Unexpected if none does.
TheoremCase match_theorem_case(const GroupElements& g, const CharacterTable& table,
                               const Classification& classification);

/// Profiles of the reference groups of clauses (b)(1) and (b)(2), computed once.
const std::vector<CodegreeProfile>& reference_profiles_b1();
const std::vector<CodegreeProfile>& reference_profiles_b2();

}  // namespace cgl
