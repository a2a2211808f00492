#include "cgl/codegree.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <iterator>
#include <set>
#include <tuple>

#include "cgl/constructors.hpp"
#include "cgl/errors.hpp"

namespace cgl {

namespace {

struct PrimePower {
  std::uint64_t p;
  unsigned beta;
};

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  unsigned beta = 0;
  while (n % p == 0) {
    n /= p;
    ++beta;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, beta};
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto q : prime_divisors(n)) result = result / q * (q - 1);
  return result;
}

template <typename Result, typename Repeated, typename Single>
Result classify_profile(const std::map<std::uint64_t, std::uint64_t>& multiplicity, Repeated make_two,
                        Single make_one) {
  std::vector<std::uint64_t> repeated;
  for (const auto& [d, m] : multiplicity)
    if (m >= 2) repeated.push_back(d);
  if (repeated.size() >= 2) return make_two(repeated[repeated.size() - 2], repeated.back());
  if (repeated.size() == 1) return make_one(multiplicity.at(repeated[0]), repeated[0]);
  return make_one(std::uint64_t{1}, multiplicity.rbegin()->first);
}

bool is_elementary_abelian(const GroupElements& g, const NormalSubgroup& k, std::uint64_t p) {
  for (auto x : k.elements) {
    const auto o = element_order(g.element(x));
    if (o != 1 && o != p) return false;
  }
  for (std::size_t i = 0; i < k.elements.size(); ++i)
    for (std::size_t j = i + 1; j < k.elements.size(); ++j) {
      const auto a = k.elements[i];
      const auto b = k.elements[j];
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
    }
  return true;
}

bool lattice_has_elementary_abelian(const GroupElements& g, const std::vector<NormalSubgroup>& lattice,
                                    std::uint64_t p, std::uint64_t order) {
  return std::any_of(lattice.begin(), lattice.end(), [&](const NormalSubgroup& k) {
    return k.order == order && is_elementary_abelian(g, k, p);
  });
}

CodegreeProfile profile_of(const GroupElements& g) { return codegree_profile(character_table(g)); }

}  // namespace

std::uint64_t codegree(const Character& chi, std::uint64_t order) {
  const std::uint64_t denom = chi.kernel_order * chi.degree;
  if (denom == 0 || order % denom != 0)
    throw InternalError("codegree is not integral: |G| = " + std::to_string(order) +
                        ", |ker| = " + std::to_string(chi.kernel_order) +
                        ", chi(1) = " + std::to_string(chi.degree));
  return order / denom;
}

CodegreeProfile codegree_profile(const CharacterTable& table) {
  CodegreeProfile profile;
  for (const auto& chi : table.characters) ++profile.multiplicity[codegree(chi, table.order)];
  profile.total = table.characters.size();
  return profile;
}

std::map<std::uint64_t, std::uint64_t> degree_profile(const CharacterTable& table) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& chi : table.characters) ++out[chi.degree];
  return out;
}

Classification classify_tkprime(const CodegreeProfile& profile) {
  if (profile.multiplicity.empty()) throw InvalidParameter("empty codegree profile");
  return classify_profile<Classification>(
      profile.multiplicity, [](auto a, auto b) { return NotTkPrime{a, b}; },
      [](auto k, auto d) { return TkPrime{k, d}; });
}

TkVerdict classify_tk(const std::map<std::uint64_t, std::uint64_t>& degrees) {
  std::map<std::uint64_t, std::uint64_t> nontrivial;
  for (const auto& [d, m] : degrees)
    if (d > 1) nontrivial.emplace(d, m);
  if (nontrivial.empty()) return TkNotApplicable{};
  return classify_profile<TkVerdict>(
      nontrivial, [](auto a, auto b) { return NotTk{a, b}; },
      [](auto k, auto d) { return Tk{k, d}; });
}

std::uint64_t dprime_n(const CharacterTable& table) {
  return table.characters.size() - codegree_profile(table).multiplicity.size();
}

bool is_d0_degrees(const CharacterTable& table) {
  for (const auto& [d, m] : degree_profile(table))
    if (d > 1 && m > 1) return false;
  return true;
}

std::vector<NormalSubgroup> normal_subgroup_lattice(const CharacterTable& table) {
  const std::size_t k = table.classes.count();
  const std::size_t words = (k + 63) / 64;
  using Mask = std::vector<std::uint64_t>;
  auto has = [](const Mask& m, std::size_t c) { return (m[c / 64] >> (c % 64) & 1) != 0; };

  // Intersecting with one kernel at a time reaches every intersection of kernels.
  std::vector<Mask> kernels;
  for (const auto& chi : table.characters) {
    Mask m(words, 0);
    for (auto c : chi.kernel_classes) m[c / 64] |= std::uint64_t{1} << (c % 64);
    kernels.push_back(std::move(m));
  }
  Mask all(words, 0);
  for (std::size_t c = 0; c < k; ++c) all[c / 64] |= std::uint64_t{1} << (c % 64);
  std::set<Mask> found{all};
  std::vector<Mask> todo{all};
  while (!todo.empty()) {
    const auto m = std::move(todo.back());
    todo.pop_back();
    for (const auto& ker : kernels) {
      Mask next(words);
      for (std::size_t w = 0; w < words; ++w) next[w] = m[w] & ker[w];
      if (found.insert(next).second) todo.push_back(std::move(next));
    }
  }

  std::vector<NormalSubgroup> out;
  for (const auto& mask : found) {
    NormalSubgroup n;
    for (ClassIndex c = 0; c < k; ++c) {
      if (!has(mask, c)) continue;
      n.classes.push_back(c);
      n.order += table.classes.sizes[c];
      const auto& members = table.classes.members[c];
      n.elements.insert(n.elements.end(), members.begin(), members.end());
    }
    std::sort(n.elements.begin(), n.elements.end());
    out.push_back(std::move(n));
  }
  std::sort(out.begin(), out.end(), [](const NormalSubgroup& a, const NormalSubgroup& b) {
    return std::tie(a.order, a.classes) < std::tie(b.order, b.classes);
  });
  return out;
}

std::vector<NormalSubgroup> normal_subgroup_lattice(const CharacterTable& table,
                                                    const GroupElements& g) {
  auto lattice = normal_subgroup_lattice(table);
  const bool abelian_group = g.is_abelian();
  for (auto& k : lattice) {
    bool commute = true;
    for (std::size_t i = 0; !abelian_group && commute && i < k.elements.size(); ++i)
      for (std::size_t j = i + 1; commute && j < k.elements.size(); ++j)
        commute = g.multiply(k.elements[i], k.elements[j]) == g.multiply(k.elements[j], k.elements[i]);
    k.abelian = commute;
  }
  return lattice;
}

namespace {

bool in_scope(const NormalSubgroup& k, LemmaScope scope) {
  if (scope == LemmaScope::AllSubgroups) return true;
  if (!k.abelian) throw InvalidParameter("lemma sweep over abelian subgroups needs a lattice built with the group");
  return *k.abelian;
}

}  // namespace

std::vector<LemmaViolation> check_lemma_small_b(const CharacterTable& table,
                                                const std::vector<NormalSubgroup>& lattice,
                                                LemmaScope scope) {
  std::vector<LemmaViolation> out;
  for (std::size_t c = 0; c < table.characters.size(); ++c) {
    const auto& chi = table.characters[c];
    const auto cod = codegree(chi, table.order);
    for (std::size_t s = 0; s < lattice.size(); ++s) {
      const auto& k = lattice[s];
      if (k.order == 1 || !in_scope(k, scope)) continue;
      std::vector<ClassIndex> meet;
      std::set_intersection(chi.kernel_classes.begin(), chi.kernel_classes.end(), k.classes.begin(),
                            k.classes.end(), std::back_inserter(meet));
      if (meet.size() != 1) continue;
      if (cod % k.order != 0)
        out.push_back({c, s,
                       "|K| = " + std::to_string(k.order) + " does not divide cod = " +
                           std::to_string(cod)});
    }
  }
  return out;
}

std::vector<LemmaViolation> check_lemma_small_c(const CharacterTable& table,
                                                const std::vector<NormalSubgroup>& lattice,
                                                LemmaScope scope) {
  std::vector<LemmaViolation> out;
  for (std::size_t c = 0; c < table.characters.size(); ++c) {
    const auto& chi = table.characters[c];
    if (!chi.faithful) continue;
    const auto cod = codegree(chi, table.order);
    for (std::size_t s = 0; s < lattice.size(); ++s) {
      const auto& k = lattice[s];
      if (k.order == 1 || k.order == table.order || !in_scope(k, scope)) continue;
      for (auto p : prime_divisors(table.order / k.order))
        if (cod == p)
          out.push_back({c, s,
                         "faithful character has prime codegree " + std::to_string(p) +
                             " dividing |G/K| with |K| = " + std::to_string(k.order)});
    }
  }
  return out;
}

bool check_abelian_order_law(const CharacterTable& table, const GroupElements& g) {
  if (!g.is_abelian()) throw InvalidParameter("abelian order law needs an abelian group");
  std::vector<std::uint64_t> cods;
  for (const auto& chi : table.characters) cods.push_back(codegree(chi, table.order));
  std::sort(cods.begin(), cods.end());
  return cods == element_order_multiset(g);
}

bool dihedral_codegree_count_check(std::uint64_t n, const CharacterTable& table) {
  if (n < 3 || n % 2 == 0) throw InvalidParameter("dihedral count check needs odd n >= 3");
  if (table.order != 2 * n) throw InvalidParameter("table is not of a group of order 2n");
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    const auto count = std::count_if(table.characters.begin(), table.characters.end(),
                                     [&](const Character& chi) {
                                       return chi.degree == 2 && codegree(chi, table.order) == d;
                                     });
    if (static_cast<std::uint64_t>(count) != euler_phi(d) / 2) return false;
  }
  return true;
}

std::optional<std::uint64_t> odd_dihedral_parameter(const GroupElements& g) {
  const std::uint64_t order = g.order();
  if (order < 6 || order % 2 != 0 || (order / 2) % 2 == 0) return std::nullopt;
  const std::uint64_t n = order / 2;
  const auto orders = element_order_multiset(g);
  const auto involutions = std::count(orders.begin(), orders.end(), std::uint64_t{2});
  const bool has_rotation = std::find(orders.begin(), orders.end(), n) != orders.end();
  if (has_rotation && static_cast<std::uint64_t>(involutions) == n) return n;
  return std::nullopt;
}

std::string to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::APsl2_5: return "A-PSL2(5)";
    case TheoremCase::APsl2_7: return "A-PSL2(7)";
    case TheoremCase::B1: return "B1";
    case TheoremCase::B2: return "B2";
    case TheoremCase::B3ElementaryAbelian: return "B3-elemab";
    case TheoremCase::B3Extraspecial2: return "B3-extraspecial2";
    case TheoremCase::B4: return "B4";
    case TheoremCase::B5: return "B5";
    case TheoremCase::NotTkPrimeConsistent: return "NotTkPrime-consistent";
    case TheoremCase::TrivialGroup: return "trivial";
    case TheoremCase::Unexpected: return "UNEXPECTED";
  }
  return "UNEXPECTED";
}

TheoremCase theorem_case_from_string(const std::string& s) {
  for (auto c : {TheoremCase::APsl2_5, TheoremCase::APsl2_7, TheoremCase::B1, TheoremCase::B2,
                 TheoremCase::B3ElementaryAbelian, TheoremCase::B3Extraspecial2, TheoremCase::B4,
                 TheoremCase::B5, TheoremCase::NotTkPrimeConsistent, TheoremCase::TrivialGroup,
                 TheoremCase::Unexpected})
    if (to_string(c) == s) return c;
  throw ParseError("unknown theorem case '" + s + "'");
}

bool is_extraspecial_2group(const GroupElements& g) {
  const auto pp = as_prime_power(g.order());
  if (!pp || pp->p != 2 || pp->beta < 3 || pp->beta % 2 == 0) return false;
  const auto z = center(g);
  if (z.size() != 2) return false;
  if (derived_subgroup(g) != z) return false;
  for (ElementIndex x = 0; x < g.order(); ++x)
    if (!std::binary_search(z.begin(), z.end(), g.multiply(x, x))) return false;
  return true;
}

const std::vector<CodegreeProfile>& reference_profiles_b1() {
  static const std::vector<CodegreeProfile> profiles{
      profile_of(cyclic(4)), profile_of(symmetric(4)), profile_of(frobenius_field(5, 1, 4)),
      profile_of(dicyclic(3))};
  return profiles;
}

const std::vector<CodegreeProfile>& reference_profiles_b2() {
  static const std::vector<CodegreeProfile> profiles{
      profile_of(direct_product(cyclic(2), symmetric(3))), profile_of(dihedral(9)),
      profile_of(q8_on_c3c3())};
  return profiles;
}

TheoremCase match_theorem_case(const GroupElements& g, const CharacterTable& table,
                               const Classification& classification) {
  if (std::holds_alternative<NotTkPrime>(classification)) return TheoremCase::NotTkPrimeConsistent;
  const auto [k, d0] = std::get<TkPrime>(classification);
  const std::uint64_t n = table.order;
  if (n == 1) return TheoremCase::TrivialGroup;

  // Only some clauses need the lattice, and it can be large.
  std::optional<std::vector<NormalSubgroup>> cached;
  auto lattice = [&]() -> const std::vector<NormalSubgroup>& {
    if (!cached) cached = normal_subgroup_lattice(table);
    return *cached;
  };
  const auto profile = codegree_profile(table);
  auto in = [&](const std::vector<CodegreeProfile>& refs) {
    return std::find(refs.begin(), refs.end(), profile) != refs.end();
  };

  if ((n == 60 || n == 168) && k == 2 && lattice().size() == 2)
    return n == 60 ? TheoremCase::APsl2_5 : TheoremCase::APsl2_7;

  if ((n == 4 || n == 24 || n == 20 || n == 12) && k == 2 && in(reference_profiles_b1()))
    return TheoremCase::B1;

  if ((n == 12 || n == 18 || n == 72) && k == 3 && in(reference_profiles_b2()))
    return TheoremCase::B2;

  if (const auto pp = as_prime_power(n); pp && g.is_abelian() && k == n - 1) {
    const auto orders = element_order_multiset(g);
    if (std::all_of(orders.begin() + 1, orders.end(), [&](auto o) { return o == pp->p; }))
      return TheoremCase::B3ElementaryAbelian;
  }

  if (k == n / 2 - 1 && is_extraspecial_2group(g)) return TheoremCase::B3Extraspecial2;

  for (unsigned beta = 2; (std::uint64_t{1} << beta) * ((std::uint64_t{1} << beta) - 1) <= n; ++beta) {
    const std::uint64_t q = std::uint64_t{1} << beta;
    if (q * (q - 1) == n && gfp::is_prime(q - 1) && k == q - 2 &&
        lattice_has_elementary_abelian(g, lattice(), 2, q))
      return TheoremCase::B4;
  }

  if (n % 2 == 0) {
    if (const auto pp = as_prime_power(n / 2);
        pp && pp->p != 2 && k == (n / 2 - 1) / 2 &&
        lattice_has_elementary_abelian(g, lattice(), pp->p, n / 2))
      return TheoremCase::B5;
  }

  return TheoremCase::Unexpected;
}

}  // namespace cgl
