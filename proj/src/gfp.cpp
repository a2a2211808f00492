#include "cgl/gfp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cgl/errors.hpp"

namespace cgl::gfp {

namespace {

Residue reduce(std::int64_t v, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  return static_cast<Residue>(r < 0 ? r + sp : r);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

void require_prime_modulus(std::uint64_t p) {
  if (p >= kMaxModulus || !is_prime(p))
    throw InvalidParameter("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Residue pow_mod(Residue base, std::uint64_t exp, std::uint64_t p) {
  Residue result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

Residue inv_mod(Residue a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw InvalidParameter("zero has no inverse mod " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

std::optional<Residue> sqrt_mod(Residue a, std::uint64_t p) {
  a %= p;
  if (a == 0) return Residue{0};
  if (p == 2) return a;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;

  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Residue z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

  Residue m = s;
  Residue c = pow_mod(z, q, p);
  Residue t = pow_mod(a, q, p);
  Residue r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    Residue i = 0;
    Residue t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    Residue b = c;
    for (Residue j = 0; j + 1 < m - i; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return std::min(r, p - r);
}

Residue primitive_root(std::uint64_t p) {
  require_prime_modulus(p);
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (Residue g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(),
                    [&](std::uint64_t q) { return pow_mod(g, (p - 1) / q, p) != 1; }))
      return g;
  }
  throw InternalError("no primitive root found mod " + std::to_string(p));
}

Residue root_of_unity(std::uint64_t p, std::uint64_t e) {
  if (e == 0 || (p - 1) % e != 0)
    throw InvalidParameter(std::to_string(e) + " does not divide " + std::to_string(p) + " - 1");
  return pow_mod(primitive_root(p), (p - 1) / e, p);
}

// ---------------------------------------------------------------------------

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den) {
  IntPoly d = den;
  trim(d);
  if (d.empty()) throw InvalidParameter("division by the zero polynomial");
  IntPoly r = num;
  trim(r);
  if (r.size() < d.size()) {
    if (!r.empty()) throw InternalError("inexact polynomial division");
    return {};
  }
  IntPoly q(r.size() - d.size() + 1, 0);
  const std::int64_t lead = d.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t top = r[k + d.size() - 1];
    if (top % lead != 0) throw InternalError("inexact polynomial division");
    const std::int64_t c = top / lead;
    q[k] = c;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= c * d[j];
  }
  trim(r);
  if (!r.empty()) throw InternalError("inexact polynomial division");
  trim(q);
  return q;
}

IntPoly poly_rem_monic(IntPoly a, const IntPoly& m) {
  trim(a);
  const std::size_t n = m.size() - 1;
  for (std::size_t k = a.size(); k-- > n;) {
    const std::int64_t c = a[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) a[k - n + j] -= c * m[j];
  }
  if (a.size() > n) a.resize(n);
  trim(a);
  return a;
}

IntPoly cyclotomic_polynomial(unsigned e) {
  if (e == 0) throw InvalidParameter("cyclotomic index must be positive");
  IntPoly num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (unsigned d = 1; d < e; ++d)
    if (e % d == 0) num = poly_div_exact(num, cyclotomic_polynomial(d));
  return num;
}

// ---------------------------------------------------------------------------

FpPoly fp_poly_mod(FpPoly a, const FpPoly& m, std::uint64_t p) {
  trim(a);
  if (m.empty()) throw InvalidParameter("reduction modulo the zero polynomial");
  const Residue lead_inv = inv_mod(m.back(), p);
  const std::size_t n = m.size() - 1;
  while (a.size() > n) {
    const Residue c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t j = 0; j <= n; ++j) a[shift + j] = (a[shift + j] + (p - c) * m[j]) % p;
    trim(a);
  }
  return a;
}

FpPoly fp_poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return fp_poly_mod(std::move(out), m, p);
}

FpPoly fp_poly_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = fp_poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Residue inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

bool fp_poly_is_irreducible(const FpPoly& f, std::uint64_t p) {
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  // x^(p^i) mod f, built by repeated p-th powering.
  FpPoly xp = fp_poly_mod(FpPoly{0, 1}, f, p);
  for (std::size_t i = 1; i <= n / 2; ++i) {
    FpPoly base = xp;
    FpPoly acc{1};
    for (std::uint64_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = fp_poly_mulmod(acc, base, f, p);
      base = fp_poly_mulmod(base, base, f, p);
    }
    xp = acc;
    FpPoly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (fp_poly_gcd(diff, f, p).size() != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

FpMatrix::FpMatrix(std::uint64_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require_prime_modulus(p);
}

FpMatrix::FpMatrix(std::uint64_t p, const std::vector<std::vector<std::int64_t>>& rows)
    : FpMatrix(p, rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_) throw InvalidParameter("ragged matrix rows");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = reduce(rows[r][c], p_);
  }
}

FpMatrix FpMatrix::identity(std::uint64_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vector FpMatrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw InvalidParameter("matrix/vector dimension mismatch");
  Vector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Residue acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + at(r, c) * v[c]) % p_;
    out[r] = acc;
  }
  return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) throw InvalidParameter("matrix product mismatch");
  FpMatrix out(p_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Residue a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) = (out.at(i, j) + a * rhs.at(k, j)) % p_;
    }
  return out;
}

RrefResult rref(FpMatrix m) {
  const std::uint64_t p = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(rank).begin());
    const Residue inv = inv_mod(m.at(rank, col), p);
    for (auto& x : m.row(rank)) x = x * inv % p;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      const Residue f = m.at(r, col);
      if (f == 0) continue;
      for (std::size_t c = col; c < m.cols(); ++c)
        m.at(r, c) = (m.at(r, c) + (p - f) * m.at(rank, c)) % p;
    }
    pivots.push_back(col);
    ++rank;
  }
  return {std::move(m), rank, std::move(pivots)};
}

Subspace::Subspace(std::uint64_t p, std::size_t ambient_dim, const std::vector<Vector>& spanning)
    : p_(p), n_(ambient_dim) {
  require_prime_modulus(p);
  if (spanning.empty()) return;
  FpMatrix m(p, spanning.size(), ambient_dim);
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    if (spanning[r].size() != ambient_dim) throw InvalidParameter("vector length mismatch");
    for (std::size_t c = 0; c < ambient_dim; ++c) m.at(r, c) = spanning[r][c] % p;
  }
  auto reduced = rref(std::move(m));
  pivots_ = std::move(reduced.pivot_cols);
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    auto row = reduced.reduced.row(r);
    basis_.emplace_back(row.begin(), row.end());
  }
}

Subspace Subspace::full(std::uint64_t p, std::size_t n) {
  std::vector<Vector> rows(n, Vector(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return Subspace(p, n, rows);
}

std::optional<Vector> Subspace::coordinates(std::span<const Residue> v) const {
  if (v.size() != n_) throw InvalidParameter("vector length mismatch");
  Vector coords(basis_.size());
  Vector residual(v.begin(), v.end());
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    const Residue c = residual[pivots_[t]] % p_;
    coords[t] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) residual[j] = (residual[j] + (p_ - c) * basis_[t][j]) % p_;
  }
  if (std::any_of(residual.begin(), residual.end(), [](Residue x) { return x != 0; }))
    return std::nullopt;
  return coords;
}

Subspace nullspace(const FpMatrix& m) {
  const std::uint64_t p = m.modulus();
  const auto reduced = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : reduced.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < reduced.rank; ++r)
      v[reduced.pivot_cols[r]] = (p - reduced.reduced.at(r, free)) % p;
    basis.push_back(std::move(v));
  }
  return Subspace(p, m.cols(), basis);
}

std::vector<EigenBlock> eigen_split(const Subspace& s, const FpMatrix& m) {
  const std::uint64_t p = s.modulus();
  const std::size_t n = s.ambient_dim();
  const std::size_t r = s.dim();
  if (m.rows() != n || m.cols() != n || m.modulus() != p)
    throw InvalidParameter("eigen_split: matrix does not act on the subspace's ambient space");

  // Restriction of M to S in the RREF basis: column t holds the coordinates of M b_t.
  FpMatrix restricted(p, r, r);
  for (std::size_t t = 0; t < r; ++t) {
    const auto image = m.apply(s.basis()[t]);
    const auto coords = s.coordinates(image);
    if (!coords) throw InternalError("eigen_split: subspace is not invariant under the matrix");
    for (std::size_t u = 0; u < r; ++u) restricted.at(u, t) = (*coords)[u];
  }

  std::vector<EigenBlock> blocks;
  std::size_t found = 0;
  for (Residue lambda = 0; lambda < p && found < r; ++lambda) {
    FpMatrix shifted = restricted;
    for (std::size_t i = 0; i < r; ++i) shifted.at(i, i) = (shifted.at(i, i) + p - lambda) % p;
    const auto kernel = nullspace(shifted);
    if (kernel.dim() == 0) continue;
    std::vector<Vector> vectors;
    for (const auto& y : kernel.basis()) {
      Vector v(n, 0);
      for (std::size_t t = 0; t < r; ++t) {
        if (y[t] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) v[j] = (v[j] + y[t] * s.basis()[t][j]) % p;
      }
      vectors.push_back(std::move(v));
    }
    found += kernel.dim();
    blocks.push_back({lambda, Subspace(p, n, vectors)});
  }
  if (found != r)
    throw InternalError("eigen_split: eigenspaces span dimension " + std::to_string(found) +
                        " of " + std::to_string(r) + "; restriction is not diagonalizable");
  return blocks;
}

}  // namespace cgl::gfp
