#include "cgl/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "cgl/errors.hpp"

namespace cgl {

std::vector<Permutation> GroupElements::generators() const {
  std::vector<Permutation> out;
  out.reserve(generator_indices_.size());
  for (auto i : generator_indices_) out.push_back(elements_[i]);
  return out;
}

ElementIndex GroupElements::index_of(const Permutation& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? static_cast<ElementIndex>(order()) : it->second;
}

ElementIndex GroupElements::multiply(ElementIndex a, ElementIndex b) const {
  const auto idx = index_of(compose(elements_[a], elements_[b]));
  if (idx == order()) throw InternalError("group is not closed under multiplication");
  return idx;
}

ElementIndex GroupElements::power(ElementIndex a, std::uint64_t exponent) const {
  const auto idx = index_of(cgl::power(elements_[a], exponent));
  if (idx == order()) throw InternalError("group is not closed under powers");
  return idx;
}

ElementIndex GroupElements::conjugate(ElementIndex x, ElementIndex by) const {
  return multiply(multiply(inverses_[by], x), by);
}

bool GroupElements::is_abelian() const {
  for (std::size_t i = 0; i < generator_indices_.size(); ++i)
    for (std::size_t j = i + 1; j < generator_indices_.size(); ++j) {
      const auto a = generator_indices_[i];
      const auto b = generator_indices_[j];
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  return true;
}

GroupElements generate(std::size_t degree, std::span<const Permutation> gens, std::size_t cap) {
  for (const auto& s : gens)
    if (s.degree() != degree)
      throw InvalidParameter("generator of degree " + std::to_string(s.degree()) +
                             " in a group of degree " + std::to_string(degree));
  if (cap == 0) throw ClosureExceedsCap(cap);

  GroupElements g;
  g.degree_ = degree;
  g.elements_.push_back(Permutation::identity(degree));
  g.index_.emplace(g.elements_.front(), 0);
  for (std::size_t pos = 0; pos < g.elements_.size(); ++pos) {
    for (const auto& s : gens) {
      Permutation next = compose(g.elements_[pos], s);
      if (g.index_.contains(next)) continue;
      if (g.elements_.size() == cap) throw ClosureExceedsCap(cap);
      g.index_.emplace(next, static_cast<ElementIndex>(g.elements_.size()));
      g.elements_.push_back(std::move(next));
    }
  }
  for (const auto& s : gens) g.generator_indices_.push_back(g.index_of(s));
  g.inverses_.resize(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) g.inverses_[i] = g.index_of(g.elements_[i].inverse());
  return g;
}

GroupElements generate(std::span<const Permutation> gens, std::size_t cap) {
  return generate(gens.empty() ? 1 : gens.front().degree(), gens, cap);
}

std::uint64_t exponent(const GroupElements& g) {
  std::uint64_t e = 1;
  for (const auto& x : g.elements()) e = std::lcm(e, element_order(x));
  return e;
}

std::vector<std::uint64_t> element_order_multiset(const GroupElements& g) {
  std::vector<std::uint64_t> out;
  out.reserve(g.order());
  for (const auto& x : g.elements()) out.push_back(element_order(x));
  std::sort(out.begin(), out.end());
  return out;
}

ConjugacyClassData conjugacy_classes(const GroupElements& g) {
  const std::size_t n = g.order();
  constexpr auto kUnassigned = static_cast<ClassIndex>(-1);
  std::vector<ClassIndex> raw_class(n, kUnassigned);
  std::vector<std::vector<ElementIndex>> orbits;

  for (ElementIndex start = 0; start < n; ++start) {
    if (raw_class[start] != kUnassigned) continue;
    const auto id = static_cast<ClassIndex>(orbits.size());
    std::vector<ElementIndex> orbit{start};
    raw_class[start] = id;
    for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
      for (auto s : g.generator_indices()) {
        const auto y = g.conjugate(orbit[pos], s);
        if (raw_class[y] == kUnassigned) {
          raw_class[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<std::uint64_t> orders(orbits.size());
  for (std::size_t c = 0; c < orbits.size(); ++c) orders[c] = element_order(g.element(orbits[c][0]));

  // Orbit 0 is the identity class since start = 0 comes first.
  std::vector<std::size_t> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin() + 1, perm.end(), [&](std::size_t a, std::size_t b) {
    return std::tuple(orders[a], orbits[a].size(), orbits[a][0]) <
           std::tuple(orders[b], orbits[b].size(), orbits[b][0]);
  });

  ConjugacyClassData data;
  data.class_of.resize(n);
  std::vector<ClassIndex> new_index(orbits.size());
  for (std::size_t c = 0; c < perm.size(); ++c) {
    const auto old = perm[c];
    new_index[old] = static_cast<ClassIndex>(c);
    data.reps.push_back(orbits[old][0]);
    data.sizes.push_back(orbits[old].size());
    data.rep_order.push_back(orders[old]);
    data.members.push_back(orbits[old]);
  }
  for (std::size_t x = 0; x < n; ++x) data.class_of[x] = new_index[raw_class[x]];
  for (auto rep : data.reps) data.inverse_class.push_back(data.class_of[g.inverse(rep)]);
  return data;
}

std::vector<ClassIndex> power_map(const GroupElements& g, const ConjugacyClassData& classes,
                                  std::uint64_t l) {
  std::vector<ClassIndex> out;
  out.reserve(classes.count());
  for (std::size_t c = 0; c < classes.count(); ++c)
    out.push_back(classes.class_of[g.power(classes.reps[c], l % classes.rep_order[c])]);
  return out;
}

std::vector<ClassIndex> power_classes(const GroupElements& g, const ConjugacyClassData& classes,
                                      ClassIndex i) {
  const auto rep = classes.reps[i];
  std::vector<ClassIndex> out;
  out.reserve(classes.rep_order[i]);
  ElementIndex y = 0;
  for (std::uint64_t l = 0; l < classes.rep_order[i]; ++l) {
    out.push_back(classes.class_of[y]);
    y = g.multiply(y, rep);
  }
  return out;
}

ClassMatrix class_matrix(const GroupElements& g, const ConjugacyClassData& classes, ClassIndex i) {
  const std::size_t k = classes.count();
  if (i >= k) throw InvalidParameter("class index " + std::to_string(i) + " out of range");
  ClassMatrix m{i, std::vector<std::vector<std::uint64_t>>(k, std::vector<std::uint64_t>(k, 0))};
  for (std::size_t j = 0; j < k; ++j) {
    auto& row = m.entries[j];
    for (auto x : classes.members[i])
      for (auto y : classes.members[j]) ++row[classes.class_of[g.multiply(x, y)]];
    for (std::size_t c = 0; c < k; ++c) {
      if (row[c] % classes.sizes[c] != 0)
        throw InternalError("class product count not divisible by the class size");
      row[c] /= classes.sizes[c];
    }
  }
  return m;
}

std::vector<ElementIndex> subgroup_closure(const GroupElements& g,
                                           std::span<const ElementIndex> seeds) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElementIndex> members{0};
  in[0] = true;
  for (std::size_t pos = 0; pos < members.size(); ++pos)
    for (auto s : seeds) {
      const auto y = g.multiply(members[pos], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<ElementIndex> center(const GroupElements& g) {
  std::vector<ElementIndex> out;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    bool central = true;
    for (auto s : g.generator_indices())
      if (g.multiply(x, s) != g.multiply(s, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<ElementIndex> derived_subgroup(const GroupElements& g) {
  std::vector<ElementIndex> seeds;
  const auto& gens = g.generator_indices();
  for (auto a : gens)
    for (auto b : gens) {
      const auto comm = g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b));
      if (comm != 0) seeds.push_back(comm);
    }
  while (true) {
    auto sub = subgroup_closure(g, seeds);
    std::vector<bool> in(g.order(), false);
    for (auto x : sub) in[x] = true;
    bool grown = false;
    for (auto x : sub)
      for (auto s : gens) {
        const auto y = g.conjugate(x, s);
        if (!in[y]) {
          in[y] = true;
          seeds.push_back(y);
          grown = true;
        }
      }
    if (!grown) return sub;
  }
}

}  // namespace cgl
