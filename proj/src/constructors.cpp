#include "cgl/constructors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "cgl/catalog.hpp"
#include "cgl/errors.hpp"

namespace cgl {

namespace {

using Cycle = std::vector<Point>;

Permutation cycle_on(std::size_t degree, Point offset, std::uint64_t length) {
  if (length < 2) return Permutation::identity(degree);
  Cycle c(length);
  for (std::uint64_t i = 0; i < length; ++i) c[i] = offset + static_cast<Point>(i);
  return Permutation::from_cycles(degree, {c});
}

/// p^e, or nullopt if it exceeds `limit`.
std::optional<std::uint64_t> checked_power(std::uint64_t p, unsigned e, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (v > limit / p) return std::nullopt;
    v *= p;
  }
  return v;
}

void require_prime(std::uint64_t p, const char* what) {
  if (!gfp::is_prime(p))
    throw InvalidParameter(std::string(what) + " " + std::to_string(p) + " is not prime");
}

bool factorial_exceeds(std::uint64_t n, std::uint64_t limit) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > limit) return true;
  }
  return false;
}

ElementIndex central_involution(const TableGroup& t) {
  for (ElementIndex z = 0; z < t.order(); ++z)
    if (z != t.identity && t.table[z][z] == t.identity && t.is_central(z)) return z;
  throw InvalidParameter("table group has no central involution");
}

}  // namespace

// ---------------------------------------------------------------------------
// TableGroup

ElementIndex TableGroup::inverse(ElementIndex a) const {
  for (ElementIndex b = 0; b < order(); ++b)
    if (table[a][b] == identity) return b;
  throw InvalidParameter("element " + std::to_string(a) + " has no inverse");
}

bool TableGroup::is_central(ElementIndex z) const {
  for (ElementIndex x = 0; x < order(); ++x)
    if (table[z][x] != table[x][z]) return false;
  return true;
}

std::uint64_t TableGroup::element_order(ElementIndex a) const {
  std::uint64_t n = 1;
  for (ElementIndex x = a; x != identity; x = table[x][a]) ++n;
  return n;
}

void validate(const TableGroup& t) {
  const std::size_t n = t.order();
  if (n == 0 || t.identity >= n) throw InvalidParameter("table group has no identity");
  for (const auto& row : t.table) {
    if (row.size() != n) throw InvalidParameter("multiplication table is not square");
    for (auto v : row)
      if (v >= n) throw InvalidParameter("multiplication table entry out of range");
  }
  for (ElementIndex x = 0; x < n; ++x) {
    if (t.table[t.identity][x] != x || t.table[x][t.identity] != x)
      throw InvalidParameter("identity element does not act trivially");
    (void)t.inverse(x);
  }
  for (ElementIndex e = 0; e < n; ++e) {
    if (e == t.identity) continue;
    bool acts_trivially = true;
    for (ElementIndex x = 0; x < n && acts_trivially; ++x) acts_trivially = t.table[e][x] == x;
    if (acts_trivially) throw InvalidParameter("identity element is not unique");
  }
  if (n <= 64) {
    for (ElementIndex a = 0; a < n; ++a)
      for (ElementIndex b = 0; b < n; ++b)
        for (ElementIndex c = 0; c < n; ++c)
          if (t.table[t.table[a][b]][c] != t.table[a][t.table[b][c]])
            throw InvalidParameter("multiplication table is not associative");
  }
}

TableGroup table_from_group(const GroupElements& g) {
  TableGroup t;
  const std::size_t n = g.order();
  t.table.assign(n, std::vector<ElementIndex>(n));
  for (ElementIndex a = 0; a < n; ++a) {
    std::ostringstream label;
    label << g.element(a);
    t.labels.push_back(label.str());
    for (ElementIndex b = 0; b < n; ++b) t.table[a][b] = g.multiply(a, b);
  }
  t.identity = 0;
  t.generators = g.generator_indices();
  return t;
}

GroupElements regular_representation(const TableGroup& t, std::size_t cap) {
  std::vector<Permutation> gens;
  for (auto s : t.generators) {
    std::vector<Point> images(t.order());
    for (ElementIndex x = 0; x < t.order(); ++x) images[x] = t.table[s][x];
    gens.emplace_back(std::move(images));
  }
  return generate(t.order(), gens, cap);
}

TableGroup central_product(const TableGroup& a, const TableGroup& b, ElementIndex za,
                           ElementIndex zb) {
  auto check = [](const TableGroup& t, ElementIndex z, const char* side) {
    if (z >= t.order() || z == t.identity || t.table[z][z] != t.identity)
      throw InvalidParameter(std::string("central product: ") + side + " element is not of order 2");
    if (!t.is_central(z))
      throw InvalidParameter(std::string("central product: ") + side + " element is not central");
  };
  check(a, za, "left");
  check(b, zb, "right");

  const std::size_t nb = b.order();
  const std::size_t pairs = a.order() * nb;
  auto pair_index = [nb](ElementIndex x, ElementIndex y) { return x * nb + y; };
  // Each coset {(x,y), (x za, y zb)} is represented by its least pair index.
  constexpr auto kNone = std::numeric_limits<ElementIndex>::max();
  std::vector<ElementIndex> coset_of(pairs, kNone);
  std::vector<std::size_t> rep_pairs;
  for (std::size_t pi = 0; pi < pairs; ++pi) {
    if (coset_of[pi] != kNone) continue;
    const auto x = static_cast<ElementIndex>(pi / nb);
    const auto y = static_cast<ElementIndex>(pi % nb);
    const auto id = static_cast<ElementIndex>(rep_pairs.size());
    coset_of[pi] = id;
    coset_of[pair_index(a.table[x][za], b.table[y][zb])] = id;
    rep_pairs.push_back(pi);
  }

  TableGroup t;
  const std::size_t n = rep_pairs.size();
  t.table.assign(n, std::vector<ElementIndex>(n));
  for (std::size_t u = 0; u < n; ++u) {
    const auto x1 = static_cast<ElementIndex>(rep_pairs[u] / nb);
    const auto y1 = static_cast<ElementIndex>(rep_pairs[u] % nb);
    t.labels.push_back(a.labels.empty() || b.labels.empty()
                           ? std::to_string(u)
                           : "(" + a.labels[x1] + "," + b.labels[y1] + ")");
    for (std::size_t v = 0; v < n; ++v) {
      const auto x2 = static_cast<ElementIndex>(rep_pairs[v] / nb);
      const auto y2 = static_cast<ElementIndex>(rep_pairs[v] % nb);
      t.table[u][v] = coset_of[pair_index(a.table[x1][x2], b.table[y1][y2])];
    }
  }
  t.identity = coset_of[pair_index(a.identity, b.identity)];
  for (auto s : a.generators) t.generators.push_back(coset_of[pair_index(s, b.identity)]);
  for (auto s : b.generators) t.generators.push_back(coset_of[pair_index(a.identity, s)]);
  return t;
}

// ---------------------------------------------------------------------------
// FieldGF

FieldGF::FieldGF(std::uint64_t p, unsigned degree) : p_(p), degree_(degree) {
  require_prime(p, "field characteristic");
  if (degree == 0) throw InvalidParameter("field extension degree must be positive");
  const auto size = checked_power(p, degree, std::uint64_t{1} << 31);
  if (!size) throw InvalidParameter("field GF(" + std::to_string(p) + "^" + std::to_string(degree) +
                                    ") is too large");
  size_ = *size;

  // Least monic modulus in the ordering by sum c_i p^i over the lower coefficients.
  for (std::uint64_t code = 0; code < size_; ++code) {
    gfp::FpPoly f(degree + 1, 0);
    std::uint64_t rest = code;
    for (unsigned i = 0; i < degree; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[degree] = 1;
    if (gfp::fp_poly_is_irreducible(f, p)) {
      modulus_ = std::move(f);
      break;
    }
  }
  if (modulus_.empty()) throw InternalError("no irreducible modulus found");

  for (std::uint64_t a = 1; a < size_; ++a)
    if (multiplicative_order(a) == size_ - 1) {
      generator_ = a;
      break;
    }
  if (generator_ == 0) throw InternalError("no multiplicative generator found");
}

gfp::FpPoly FieldGF::to_poly(std::uint64_t a) const {
  gfp::FpPoly f(degree_, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    f[i] = a % p_;
    a /= p_;
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

std::uint64_t FieldGF::from_poly(const gfp::FpPoly& f) const {
  std::uint64_t a = 0;
  for (std::size_t i = f.size(); i-- > 0;) a = a * p_ + f[i];
  return a;
}

std::uint64_t FieldGF::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint64_t FieldGF::mul(std::uint64_t a, std::uint64_t b) const {
  return from_poly(gfp::fp_poly_mulmod(to_poly(a), to_poly(b), modulus_, p_));
}

std::uint64_t FieldGF::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t FieldGF::multiplicative_order(std::uint64_t a) const {
  if (a == 0) throw InvalidParameter("zero has no multiplicative order");
  std::uint64_t n = 1;
  for (std::uint64_t x = a; x != 1; x = mul(x, a)) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Families

GroupElements cyclic(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw InvalidParameter("cyclic group order must be positive");
  if (n > cap) throw ClosureExceedsCap(cap);
  if (n == 1) return generate(1, {}, cap);
  const std::vector<Permutation> gens{cycle_on(n, 0, n)};
  return generate(n, gens, cap);
}

GroupElements abelian(const std::vector<std::uint64_t>& factors, std::size_t cap) {
  if (factors.empty()) throw InvalidParameter("abelian group needs at least one factor");
  std::uint64_t degree = 0;
  std::uint64_t order = 1;
  for (auto f : factors) {
    if (f == 0) throw InvalidParameter("abelian factor must be positive");
    if (order > cap / f) throw ClosureExceedsCap(cap);
    order *= f;
    degree += f;
  }
  std::vector<Permutation> gens;
  Point offset = 0;
  for (auto f : factors) {
    if (f > 1) gens.push_back(cycle_on(degree, offset, f));
    offset += static_cast<Point>(f);
  }
  return generate(degree, gens, cap);
}

GroupElements elementary_abelian(std::uint64_t p, unsigned beta, std::size_t cap) {
  require_prime(p, "elementary abelian prime");
  if (beta == 0) throw InvalidParameter("elementary abelian rank must be positive");
  if (!checked_power(p, beta, cap)) throw ClosureExceedsCap(cap);
  return abelian(std::vector<std::uint64_t>(beta, p), cap);
}

GroupElements dihedral(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw InvalidParameter("dihedral parameter must be positive");
  if (2 * n > cap) throw ClosureExceedsCap(cap);
  // D_2 and D_4 are not faithful on n points; give them an extra swapped pair.
  if (n == 1) return generate(2, std::vector<Permutation>{Permutation::from_cycles(2, {{0, 1}})}, cap);
  if (n == 2)
    return generate(4, std::vector<Permutation>{Permutation::from_cycles(4, {{0, 1}}),
                                                Permutation::from_cycles(4, {{2, 3}})},
                    cap);
  std::vector<Point> rotation(n);
  std::vector<Point> reflection(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    rotation[x] = static_cast<Point>((x + 1) % n);
    reflection[x] = static_cast<Point>((n - x) % n);
  }
  const std::vector<Permutation> gens{Permutation(rotation), Permutation(reflection)};
  return generate(n, gens, cap);
}

TableGroup dicyclic_table(std::uint64_t n) {
  if (n == 0) throw InvalidParameter("dicyclic parameter must be positive");
  const std::uint64_t m = 2 * n;  // order of a
  const std::size_t order = 2 * m;
  // Element a^i b^j has index i + m j.
  auto index = [m](std::uint64_t i, std::uint64_t j) { return static_cast<ElementIndex>(i % m + m * j); };
  TableGroup t;
  t.table.assign(order, std::vector<ElementIndex>(order));
  for (std::uint64_t x = 0; x < order; ++x) {
    const std::uint64_t i = x % m;
    const std::uint64_t j = x / m;
    t.labels.push_back("a^" + std::to_string(i) + (j ? "b" : ""));
    for (std::uint64_t y = 0; y < order; ++y) {
      const std::uint64_t k = y % m;
      const std::uint64_t l = y / m;
      // b a^k = a^-k b and b^2 = a^n.
      const std::uint64_t shifted = j ? (i + m - k) : (i + k);
      t.table[x][y] = (j && l) ? index(shifted + n, 0) : index(shifted, j ^ l);
    }
  }
  t.identity = 0;
  t.generators = {index(1, 0), index(0, 1)};
  return t;
}

GroupElements dicyclic(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw InvalidParameter("dicyclic parameter must be positive");
  if (4 * n > cap) throw ClosureExceedsCap(cap);
  return regular_representation(dicyclic_table(n), cap);
}

GroupElements symmetric(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw InvalidParameter("symmetric degree must be positive");
  if (factorial_exceeds(n, cap)) throw ClosureExceedsCap(cap);
  if (n == 1) return generate(1, {}, cap);
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
  if (n > 2) gens.push_back(cycle_on(n, 0, n));
  return generate(n, gens, cap);
}

GroupElements alternating(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw InvalidParameter("alternating degree must be positive");
  if (n > 2 && factorial_exceeds(n, 2 * cap)) throw ClosureExceedsCap(cap);
  std::vector<Permutation> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return generate(n, gens, cap);
}

GroupElements frobenius_field(std::uint64_t p, unsigned beta, std::uint64_t m, std::size_t cap) {
  require_prime(p, "field characteristic");
  if (beta == 0) throw InvalidParameter("field degree must be positive");
  const auto q = checked_power(p, beta, cap);
  if (!q) throw ClosureExceedsCap(cap);
  if (m < 2 || (*q - 1) % m != 0)
    throw InvalidParameter("complement order " + std::to_string(m) + " does not divide " +
                           std::to_string(*q) + " - 1");
  if (m > cap / *q) throw ClosureExceedsCap(cap);

  const FieldGF field(p, beta);
  std::vector<Permutation> gens;
  std::uint64_t basis = 1;
  for (unsigned t = 0; t < beta; ++t, basis *= p) {
    std::vector<Point> images(*q);
    for (std::uint64_t x = 0; x < *q; ++x) images[x] = static_cast<Point>(field.add(x, basis));
    gens.emplace_back(std::move(images));
  }
  const std::uint64_t g = field.pow(field.generator(), (*q - 1) / m);
  std::vector<Point> scaling(*q);
  for (std::uint64_t x = 0; x < *q; ++x) scaling[x] = static_cast<Point>(field.mul(g, x));
  gens.emplace_back(std::move(scaling));
  return generate(*q, gens, cap);
}

std::vector<std::array<std::array<int, 2>, 2>> q8_matrix_generators() {
  return {{{{0, 2}, {1, 0}}}, {{{1, 1}, {1, 2}}}};
}

GroupElements q8_on_c3c3(std::size_t cap) {
  // Point a + 3b is the column vector (a, b) of GF(3)^2.
  auto point = [](int a, int b) { return static_cast<Point>(((a % 3) + 3) % 3 + 3 * (((b % 3) + 3) % 3)); };
  std::vector<Permutation> gens;
  for (auto [da, db] : {std::pair{1, 0}, std::pair{0, 1}}) {
    std::vector<Point> images(9);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) images[point(a, b)] = point(a + da, b + db);
    gens.emplace_back(std::move(images));
  }
  for (const auto& m : q8_matrix_generators()) {
    std::vector<Point> images(9);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        images[point(a, b)] = point(m[0][0] * a + m[0][1] * b, m[1][0] * a + m[1][1] * b);
    gens.emplace_back(std::move(images));
  }
  return generate(9, gens, cap);
}

TableGroup extraspecial_table(unsigned n, ExtraspecialSign sign) {
  if (n == 0) throw InvalidParameter("extraspecial rank must be positive");
  const TableGroup d8 = table_from_group(dihedral(4));
  const ElementIndex d8_center = central_involution(d8);
  TableGroup t = sign == ExtraspecialSign::Plus ? d8 : dicyclic_table(2);
  for (unsigned i = 1; i < n; ++i) t = central_product(t, d8, central_involution(t), d8_center);
  return t;
}

GroupElements extraspecial(unsigned n, ExtraspecialSign sign, std::size_t cap) {
  if (n == 0) throw InvalidParameter("extraspecial rank must be positive");
  if (!checked_power(2, 2 * n + 1, cap)) throw ClosureExceedsCap(cap);
  return regular_representation(extraspecial_table(n, sign), cap);
}

GroupElements psl2(std::uint64_t q, std::size_t cap) {
  require_prime(q, "PSL(2,q) field size");
  if (q < 5) throw InvalidParameter("PSL(2,q) needs q >= 5");
  if (q * (q * q - 1) / 2 > cap) throw ClosureExceedsCap(cap);
  const auto inf = static_cast<Point>(q);
  std::vector<Point> shift(q + 1);
  std::vector<Point> invert(q + 1);
  for (std::uint64_t x = 0; x < q; ++x) {
    shift[x] = static_cast<Point>((x + 1) % q);
    invert[x] = x == 0 ? inf : static_cast<Point>((q - gfp::inv_mod(x, q)) % q);
  }
  shift[inf] = inf;
  invert[inf] = 0;
  const std::vector<Permutation> gens{Permutation(shift), Permutation(invert)};
  return generate(q + 1, gens, cap);
}

GroupElements direct_product(const GroupElements& a, const GroupElements& b, std::size_t cap) {
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& s : a.generators()) gens.push_back(s.extended(degree));
  for (const auto& s : b.generators()) {
    std::vector<Point> images(degree);
    for (Point x = 0; x < a.degree(); ++x) images[x] = x;
    for (Point x = 0; x < b.degree(); ++x)
      images[a.degree() + x] = static_cast<Point>(a.degree()) + s(x);
    gens.emplace_back(std::move(images));
  }
  return generate(degree, gens, cap);
}

// ---------------------------------------------------------------------------
// Spec parsing

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse_all() {
    GroupSpec spec = parse(false);
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, at);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 1'000'000'000'000ull) fail_at("integer too large", start);
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  std::uint64_t positive() {
    const std::size_t start = pos_;
    const auto v = integer();
    if (v == 0) fail_at("parameter must be positive", start);
    return v;
  }

  std::uint64_t prime() {
    const std::size_t start = pos_;
    const auto v = integer();
    if (!gfp::is_prime(v)) fail_at(std::to_string(v) + " is not prime", start);
    return v;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a group family name");
    return std::string(text_.substr(start, pos_ - start));
  }

  GroupSpec parse(bool nested) {
    const std::size_t start = pos_;
    const std::string family = identifier();
    GroupSpec spec{};
    if (family == "c3c3q8") {
      spec.family = Family::C3C3Q8;
      return spec;
    }
    expect(':');
    if (family == "cyclic" || family == "dihedral" || family == "dicyclic" || family == "sym" ||
        family == "alt") {
      spec.family = family == "cyclic"     ? Family::Cyclic
                    : family == "dihedral" ? Family::Dihedral
                    : family == "dicyclic" ? Family::Dicyclic
                    : family == "sym"      ? Family::Symmetric
                                           : Family::Alternating;
      spec.params = {positive()};
    } else if (family == "elemab") {
      spec.family = Family::ElementaryAbelian;
      const auto p = prime();
      expect('^');
      spec.params = {p, positive()};
    } else if (family == "abelian") {
      spec.family = Family::Abelian;
      spec.params = {positive()};
      while (accept('x')) spec.params.push_back(positive());
    } else if (family == "frobenius") {
      spec.family = Family::Frobenius;
      const auto p = prime();
      expect('^');
      const auto beta = positive();
      expect(':');
      const std::size_t m_pos = pos_;
      const auto m = integer();
      const auto q = beta < 64 ? checked_power(p, static_cast<unsigned>(beta), 1ull << 40) : std::nullopt;
      if (!q) fail_at("field size too large", m_pos);
      if (m < 2 || (*q - 1) % m != 0)
        fail_at("complement order " + std::to_string(m) + " must be >= 2 and divide " +
                    std::to_string(*q) + " - 1",
                m_pos);
      spec.params = {p, beta, m};
    } else if (family == "extraspecial") {
      spec.family = Family::Extraspecial;
      expect('2');
      expect('^');
      const std::size_t k_pos = pos_;
      const auto k = integer();
      if (k < 3 || k % 2 == 0) fail_at("extraspecial order 2^k needs odd k >= 3", k_pos);
      expect(':');
      if (accept('+')) {
        spec.minus = false;
      } else if (accept('-')) {
        spec.minus = true;
      } else {
        fail("expected '+' or '-'");
      }
      spec.params = {k};
    } else if (family == "psl2") {
      spec.family = Family::Psl2;
      const std::size_t q_pos = pos_;
      const auto q = prime();
      if (q < 5) fail_at("psl2 needs a prime q >= 5", q_pos);
      spec.params = {q};
    } else if (family == "direct") {
      spec.family = Family::Direct;
      expect('(');
      spec.factors.push_back(parse(true));
      expect(')');
      expect('*');
      expect('(');
      spec.factors.push_back(parse(true));
      expect(')');
    } else if (family == "perm") {
      spec.family = Family::PermFile;
      const std::size_t path_start = pos_;
      while (pos_ < text_.size() && !(nested && text_[pos_] == ')')) ++pos_;
      spec.path = std::string(text_.substr(path_start, pos_ - path_start));
      if (spec.path.empty()) fail("expected a file name");
    } else {
      fail_at("unknown group family '" + family + "'", start);
    }
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string GroupSpec::canonical() const {
  auto n = [this](std::size_t i) { return std::to_string(params.at(i)); };
  switch (family) {
    case Family::Cyclic: return "cyclic:" + n(0);
    case Family::ElementaryAbelian: return "elemab:" + n(0) + "^" + n(1);
    case Family::Abelian: {
      std::string s = "abelian:" + n(0);
      for (std::size_t i = 1; i < params.size(); ++i) s += "x" + n(i);
      return s;
    }
    case Family::Dihedral: return "dihedral:" + n(0);
    case Family::Dicyclic: return "dicyclic:" + n(0);
    case Family::Symmetric: return "sym:" + n(0);
    case Family::Alternating: return "alt:" + n(0);
    case Family::Frobenius: return "frobenius:" + n(0) + "^" + n(1) + ":" + n(2);
    case Family::Extraspecial: return "extraspecial:2^" + n(0) + ":" + (minus ? "-" : "+");
    case Family::Psl2: return "psl2:" + n(0);
    case Family::C3C3Q8: return "c3c3q8";
    case Family::Direct:
      return "direct:(" + factors.at(0).canonical() + ")*(" + factors.at(1).canonical() + ")";
    case Family::PermFile: return "perm:" + path;
  }
  return {};
}

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse_all(); }

GroupElements build_group(const GroupSpec& spec, std::size_t cap) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::Cyclic: return cyclic(p[0], cap);
    case Family::ElementaryAbelian:
      if (p[1] > 64) throw ClosureExceedsCap(cap);
      return elementary_abelian(p[0], static_cast<unsigned>(p[1]), cap);
    case Family::Abelian: return abelian(p, cap);
    case Family::Dihedral: return dihedral(p[0], cap);
    case Family::Dicyclic: return dicyclic(p[0], cap);
    case Family::Symmetric: return symmetric(p[0], cap);
    case Family::Alternating: return alternating(p[0], cap);
    case Family::Frobenius: return frobenius_field(p[0], static_cast<unsigned>(p[1]), p[2], cap);
    case Family::Extraspecial:
      if (p[0] > 63) throw ClosureExceedsCap(cap);
      return extraspecial(static_cast<unsigned>((p[0] - 1) / 2),
                          spec.minus ? ExtraspecialSign::Minus : ExtraspecialSign::Plus, cap);
    case Family::Psl2: return psl2(p[0], cap);
    case Family::C3C3Q8: return q8_on_c3c3(cap);
    case Family::Direct:
      return direct_product(build_group(spec.factors.at(0), cap),
                            build_group(spec.factors.at(1), cap), cap);
    case Family::PermFile: {
      const auto entry = load_permutation_file(spec.path);
      return generate(entry.degree, entry.permutations(), cap);
    }
  }
  throw InternalError("unhandled group family");
}

GroupElements parse_spec(std::string_view text, std::size_t cap) {
  return build_group(parse_group_spec(text), cap);
}

}  // namespace cgl
