#pragma once

// Finite permutation groups held as a fully enumerated element list, plus
// the class-level data the character table needs: conjugacy classes, power
// maps and class-algebra structure constants.

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "cgl/permutation.hpp"

namespace cgl {

using ElementIndex = std::uint32_t;
using ClassIndex = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 5000;

class GroupElements {
 public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }

  /// Index 0 is the identity; the rest follow breadth-first insertion order.
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(ElementIndex i) const { return elements_[i]; }

  const std::vector<ElementIndex>& generator_indices() const { return generator_indices_; }
  std::vector<Permutation> generators() const;

  /// Index of g, or order() if g is not an element.
  ElementIndex index_of(const Permutation& g) const;
  bool contains(const Permutation& g) const { return index_of(g) != order(); }

  /// Index of element(a) * element(b).
  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const { return inverses_[a]; }
  ElementIndex power(ElementIndex a, std::uint64_t exponent) const;
  ElementIndex conjugate(ElementIndex x, ElementIndex by) const;

  bool is_abelian() const;

 private:
  friend GroupElements generate(std::size_t, std::span<const Permutation>, std::size_t);

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<ElementIndex> generator_indices_;
  std::vector<ElementIndex> inverses_;
  std::unordered_map<Permutation, ElementIndex, PermutationHash> index_;
};

/// Breadth-first closure from the identity. Each dequeued element is
/// multiplied on the right by the generators in the given order; new
/// products are appended. Throws ClosureExceedsCap past `cap` elements.
GroupElements generate(std::size_t degree, std::span<const Permutation> gens,
                       std::size_t cap = kDefaultOrderCap);

/// Degree taken from the generators; an empty list gives the trivial group on one point.
GroupElements generate(std::span<const Permutation> gens, std::size_t cap = kDefaultOrderCap);

std::uint64_t exponent(const GroupElements& g);

/// Sorted multiset of element orders.
std::vector<std::uint64_t> element_order_multiset(const GroupElements& g);

struct ConjugacyClassData {
  std::vector<ClassIndex> class_of;            // element index -> class index
  std::vector<ElementIndex> reps;              // least element index in each class
  std::vector<std::size_t> sizes;
  std::vector<ClassIndex> inverse_class;
  std::vector<std::uint64_t> rep_order;
  std::vector<std::vector<ElementIndex>> members;  // ascending element indices

  std::size_t count() const { return reps.size(); }
};

/// Identity class first, the rest sorted by (representative order, size, representative index).
ConjugacyClassData conjugacy_classes(const GroupElements& g);

/// Class of rep^l for every class.
std::vector<ClassIndex> power_map(const GroupElements& g, const ConjugacyClassData& classes,
                                  std::uint64_t l);

/// Classes of rep_i^l for l = 0 .. rep_order[i]-1.
std::vector<ClassIndex> power_classes(const GroupElements& g, const ConjugacyClassData& classes,
                                      ClassIndex i);

/// Structure constants of left multiplication by the class sum C_i:
/// C_i * C_j = sum_k entries[j][k] C_k.
struct ClassMatrix {
  ClassIndex index;
  std::vector<std::vector<std::uint64_t>> entries;
};

ClassMatrix class_matrix(const GroupElements& g, const ConjugacyClassData& classes, ClassIndex i);

// Subgroup helpers used by the structural predicates.

/// Sorted element indices of the subgroup generated by `seeds`.
std::vector<ElementIndex> subgroup_closure(const GroupElements& g,
                                           std::span<const ElementIndex> seeds);

std::vector<ElementIndex> center(const GroupElements& g);

/// Normal closure of the commutators of the generators.
std::vector<ElementIndex> derived_subgroup(const GroupElements& g);

}  // namespace cgl
