#include "cgl/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cgl/errors.hpp"

namespace cgl {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

gfp::FpMatrix class_matrix_mod_p(const GroupElements& g, const ConjugacyClassData& classes,
                                 ClassIndex i, std::uint64_t p) {
  const auto m = class_matrix(g, classes, i);
  gfp::FpMatrix out(p, classes.count(), classes.count());
  for (std::size_t j = 0; j < classes.count(); ++j)
    for (std::size_t k = 0; k < classes.count(); ++k) out.at(j, k) = m.entries[j][k] % p;
  return out;
}

}  // namespace

std::uint64_t CharacterValue::total() const {
  return std::accumulate(mult.begin(), mult.end(), std::uint64_t{0});
}

bool CharacterValue::is_degree(std::uint64_t degree) const {
  return !mult.empty() && mult[0] == degree && total() == degree;
}

std::vector<std::uint64_t> CharacterTable::degrees() const {
  std::vector<std::uint64_t> out;
  for (const auto& c : characters) out.push_back(c.degree);
  return out;
}

std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent) {
  if (order == 0 || exponent == 0) throw InvalidParameter("group order and exponent must be positive");
  const std::uint64_t bound = 2 * isqrt(order);
  for (std::uint64_t p = exponent + 1;; p += exponent) {
    if (p >= gfp::kMaxModulus) throw InternalError("no Dixon prime below 2^31");
    if (p > bound && gfp::is_prime(p)) return p;
  }
}

void require_dixon_prime(std::uint64_t p, std::uint64_t order, std::uint64_t exponent) {
  gfp::require_prime_modulus(p);
  if ((p - 1) % exponent != 0)
    throw InvalidParameter("prime " + std::to_string(p) + " is not 1 mod the exponent " +
                           std::to_string(exponent));
  if (p <= 2 * isqrt(order))
    throw InvalidParameter("prime " + std::to_string(p) + " does not exceed 2*floor(sqrt(" +
                           std::to_string(order) + "))");
}

std::vector<gfp::Vector> omega_eigenvectors(std::size_t class_count, const ClassMatrixSource& source,
                                            std::uint64_t p) {
  std::vector<gfp::Subspace> blocks{gfp::Subspace::full(p, class_count)};
  auto split_done = [&] {
    return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.dim() == 1; });
  };
  // Class 0 is the identity, whose matrix is the identity; it never splits anything.
  for (ClassIndex i = 1; i < class_count && !split_done(); ++i) {
    const auto m = source(i);
    std::vector<gfp::Subspace> next;
    for (auto& block : blocks) {
      if (block.dim() == 1) {
        next.push_back(std::move(block));
        continue;
      }
      for (auto& piece : gfp::eigen_split(block, m)) next.push_back(std::move(piece.space));
    }
    blocks = std::move(next);
  }
  if (!split_done())
    throw InternalError("class algebra did not split into one-dimensional eigenspaces");

  std::vector<gfp::Vector> out;
  for (const auto& block : blocks) {
    gfp::Vector v = block.basis().front();
    if (v[0] == 0) throw InternalError("central character vanishes at the identity class");
    const auto inv = gfp::inv_mod(v[0], p);
    for (auto& x : v) x = x * inv % p;
    out.push_back(std::move(v));
  }
  return out;
}

std::uint64_t degree_from_omega(const gfp::Vector& omega, const std::vector<std::size_t>& sizes,
                                const std::vector<ClassIndex>& inverse_class, std::uint64_t order,
                                std::uint64_t p) {
  gfp::Residue s = 0;
  for (std::size_t i = 0; i < omega.size(); ++i)
    s = (s + omega[i] * omega[inverse_class[i]] % p * gfp::inv_mod(sizes[i] % p, p)) % p;
  if (s == 0) throw InternalError("degree recovery: orthogonality sum vanishes mod p");
  const auto square = (order % p) * gfp::inv_mod(s, p) % p;
  const auto root = gfp::sqrt_mod(square, p);
  if (!root) throw InternalError("degree recovery: |G|/s is not a square mod p");
  const std::uint64_t d = *root;
  if (d == 0 || d * d > order)
    throw InternalError("degree recovery: degree " + std::to_string(d) + " out of range");
  if (order % d != 0)
    throw InternalError("degree recovery: degree " + std::to_string(d) + " does not divide |G|");
  return d;
}

std::vector<CharacterValue> lift_values(const gfp::Vector& omega, std::uint64_t degree,
                                        const ConjugacyClassData& classes,
                                        const std::vector<std::vector<ClassIndex>>& powers,
                                        std::uint64_t p, std::uint64_t e) {
  const std::size_t k = classes.count();
  gfp::Vector chi_hat(k);
  for (std::size_t c = 0; c < k; ++c)
    chi_hat[c] = omega[c] * (degree % p) % p * gfp::inv_mod(classes.sizes[c] % p, p) % p;

  const gfp::Residue zeta = gfp::root_of_unity(p, e);
  std::vector<CharacterValue> values(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t o = classes.rep_order[i];
    const auto& pc = powers.at(i);
    if (pc.size() != o || e % o != 0) throw InternalError("power classes do not match class order");
    const gfp::Residue z = gfp::pow_mod(zeta, e / o, p);
    const gfp::Residue z_inv = gfp::inv_mod(z, p);
    const gfp::Residue o_inv = gfp::inv_mod(o % p, p);

    auto& mult = values[i].mult;
    mult.assign(e, 0);
    std::uint64_t total = 0;
    for (std::uint64_t j = 0; j < o; ++j) {
      const gfp::Residue step = gfp::pow_mod(z_inv, j, p);
      gfp::Residue acc = 0;
      gfp::Residue twiddle = 1;
      for (std::uint64_t l = 0; l < o; ++l) {
        acc = (acc + chi_hat[pc[l]] * twiddle) % p;
        twiddle = twiddle * step % p;
      }
      const gfp::Residue m = acc * o_inv % p;
      if (m > degree)
        throw InternalError("value lift: multiplicity " + std::to_string(m) + " exceeds degree " +
                            std::to_string(degree) + " at class " + std::to_string(i));
      mult[j * (e / o)] = static_cast<std::uint32_t>(m);
      total += m;
    }
    if (total != degree)
      throw InternalError("value lift: multiplicities at class " + std::to_string(i) +
                          " do not sum to the degree");
  }
  return values;
}

CharacterTable character_table(const GroupElements& g, std::optional<std::uint64_t> prime) {
  return character_table(g, conjugacy_classes(g), prime);
}

CharacterTable character_table(const GroupElements& g, const ConjugacyClassData& classes,
                               std::optional<std::uint64_t> prime) {
  CharacterTable table;
  table.order = g.order();
  table.classes = classes;
  table.exponent = exponent(g);
  if (prime) {
    require_dixon_prime(*prime, table.order, table.exponent);
    table.prime = *prime;
  } else {
    table.prime = dixon_prime(table.order, table.exponent);
  }
  const std::uint64_t p = table.prime;
  const std::uint64_t e = table.exponent;
  table.zeta = gfp::root_of_unity(p, e);

  const std::size_t k = classes.count();
  const auto omegas = omega_eigenvectors(
      k, [&](ClassIndex i) { return class_matrix_mod_p(g, classes, i, p); }, p);
  if (omegas.size() != k) throw InternalError("eigenvector count differs from class count");

  std::vector<std::vector<ClassIndex>> powers(k);
  for (ClassIndex i = 0; i < k; ++i) powers[i] = power_classes(g, classes, i);

  for (const auto& omega : omegas) {
    Character chi;
    chi.degree = degree_from_omega(omega, classes.sizes, classes.inverse_class, table.order, p);
    chi.values = lift_values(omega, chi.degree, classes, powers, p, e);
    for (ClassIndex i = 0; i < k; ++i)
      if (chi.values[i].is_degree(chi.degree)) {
        chi.kernel_classes.push_back(i);
        chi.kernel_order += classes.sizes[i];
      }
    chi.faithful = chi.kernel_classes.size() == 1;
    table.characters.push_back(std::move(chi));
  }

  // Degree ascending, then value vectors descending; the principal character
  // has the lexicographically largest vector among linear characters.
  std::sort(table.characters.begin(), table.characters.end(),
            [](const Character& a, const Character& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return a.values > b.values;
            });

  std::uint64_t sum_squares = 0;
  for (const auto& chi : table.characters) {
    sum_squares += chi.degree * chi.degree;
    if (table.order % chi.kernel_order != 0)
      throw InternalError("kernel order does not divide the group order");
  }
  if (sum_squares != table.order)
    throw InternalError("sum of squared degrees " + std::to_string(sum_squares) +
                        " differs from the group order " + std::to_string(table.order));
  if (table.characters.front().kernel_order != table.order)
    throw InternalError("first character is not the principal character");
  return table;
}

gfp::Residue value_mod_p(const CharacterValue& v, gfp::Residue zeta, std::uint64_t p) {
  gfp::Residue acc = 0;
  gfp::Residue power = 1;
  for (auto m : v.mult) {
    acc = (acc + m * power) % p;
    power = power * zeta % p;
  }
  return acc;
}

gfp::IntPoly exact_inner_product(const CharacterTable& table, std::size_t a, std::size_t b) {
  const std::uint64_t e = table.exponent;
  gfp::IntPoly acc(e, 0);
  const auto& ca = table.characters.at(a);
  const auto& cb = table.characters.at(b);
  for (std::size_t i = 0; i < table.classes.count(); ++i) {
    const auto& x = ca.values[i].mult;
    const auto& y = cb.values[i].mult;
    const auto weight = static_cast<std::int64_t>(table.classes.sizes[i]);
    for (std::uint64_t s = 0; s < e; ++s) {
      if (x[s] == 0) continue;
      for (std::uint64_t t = 0; t < e; ++t) {
        if (y[t] == 0) continue;
        // Complex conjugation sends zeta^t to zeta^(e - t).
        acc[(s + e - t) % e] += weight * x[s] * y[t];
      }
    }
  }
  return gfp::poly_rem_monic(std::move(acc), gfp::cyclotomic_polynomial(static_cast<unsigned>(e)));
}

OrthogonalityReport verify_orthogonality(const CharacterTable& table) {
  OrthogonalityReport report;
  const std::uint64_t p = table.prime;
  const std::size_t k = table.classes.count();
  const std::size_t n = table.characters.size();
  const auto& inv = table.classes.inverse_class;

  std::vector<gfp::Vector> hat(n, gfp::Vector(k));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < k; ++i)
      hat[c][i] = value_mod_p(table.characters[c].values[i], table.zeta, p);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      gfp::Residue s = 0;
      for (std::size_t i = 0; i < k; ++i)
        s = (s + table.classes.sizes[i] % p * hat[a][i] % p * hat[b][inv[i]]) % p;
      const gfp::Residue expect = a == b ? table.order % p : 0;
      if (s != expect) {
        report.rows_mod_p = false;
        report.failures.push_back("row orthogonality mod p fails for characters " +
                                  std::to_string(a) + ", " + std::to_string(b));
      }
    }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      gfp::Residue s = 0;
      for (std::size_t c = 0; c < n; ++c) s = (s + hat[c][i] * hat[c][inv[j]]) % p;
      const gfp::Residue expect = i == j ? (table.order / table.classes.sizes[i]) % p : 0;
      if (s != expect) {
        report.columns_mod_p = false;
        report.failures.push_back("column orthogonality mod p fails for classes " +
                                  std::to_string(i) + ", " + std::to_string(j));
      }
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const auto product = exact_inner_product(table, a, b);
      const bool ok = a == b ? (product.size() == 1 &&
                                product[0] == static_cast<std::int64_t>(table.order))
                             : product.empty();
      if (!ok) {
        report.rows_exact = false;
        report.failures.push_back("exact row orthogonality fails for characters " +
                                  std::to_string(a) + ", " + std::to_string(b));
      }
    }
  return report;
}

}  // namespace cgl
