#pragma once

// Exact arithmetic over prime fields GF(p) and over the integers: modular
// helpers, dense Gauss-Jordan elimination, eigenspace splitting, and the
// polynomial routines used by the field constructors and by exact
// cyclotomic verification.
//
// All residues are std::uint64_t in [0, p) with p < 2^31, so a product of
// two residues always fits in 64 bits.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cgl::gfp {

using Residue = std::uint64_t;
using Vector = std::vector<Residue>;

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

bool is_prime(std::uint64_t n);

/// Throws InvalidParameter unless p is a prime below 2^31.
void require_prime_modulus(std::uint64_t p);

Residue pow_mod(Residue base, std::uint64_t exp, std::uint64_t p);

/// Inverse of a nonzero residue; InvalidParameter for a == 0 mod p.
Residue inv_mod(Residue a, std::uint64_t p);

/// Square root in (0, p/2) via Tonelli-Shanks, using the least quadratic
/// non-residue as the auxiliary element. a == 0 yields 0.
std::optional<Residue> sqrt_mod(Residue a, std::uint64_t p);

/// Least generator of GF(p)^x.
Residue primitive_root(std::uint64_t p);

/// primitive_root(p)^((p-1)/e); requires e | p - 1.
Residue root_of_unity(std::uint64_t p, std::uint64_t e);

// ---------------------------------------------------------------------------
// Integer polynomials, coefficient lists low degree first.

using IntPoly = std::vector<std::int64_t>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Exact division; throws InternalError if the remainder is nonzero.
IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den);

/// Remainder of a modulo a monic polynomial m. Result has no trailing zeros.
IntPoly poly_rem_monic(IntPoly a, const IntPoly& m);

/// Phi_e(x) by dividing x^e - 1 by Phi_d(x) for every proper divisor d of e.
IntPoly cyclotomic_polynomial(unsigned e);

// ---------------------------------------------------------------------------
// Polynomials over GF(p), coefficient lists low degree first, no trailing zeros
// (the zero polynomial is the empty list).

using FpPoly = std::vector<Residue>;

FpPoly fp_poly_mod(FpPoly a, const FpPoly& m, std::uint64_t p);
FpPoly fp_poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p);
FpPoly fp_poly_gcd(FpPoly a, FpPoly b, std::uint64_t p);

/// Distinct-degree test: f (monic, degree n) is irreducible iff
/// gcd(x^(p^i) - x, f) = 1 for every 1 <= i <= n/2.
bool fp_poly_is_irreducible(const FpPoly& f, std::uint64_t p);

// ---------------------------------------------------------------------------
// Dense matrices and subspaces.

class FpMatrix {
 public:
  FpMatrix(std::uint64_t p, std::size_t rows, std::size_t cols);
  /// Entries are reduced mod p on construction.
  FpMatrix(std::uint64_t p, const std::vector<std::vector<std::int64_t>>& rows);

  static FpMatrix identity(std::uint64_t p, std::size_t n);

  std::uint64_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  /// this * v, treating v as a column vector.
  Vector apply(std::span<const Residue> v) const;

  FpMatrix operator*(const FpMatrix& rhs) const;
  bool operator==(const FpMatrix& rhs) const = default;

 private:
  std::uint64_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

struct RrefResult {
  FpMatrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(FpMatrix m);

/// A subspace of GF(p)^n held as a basis in reduced row echelon form.
class Subspace {
 public:
  /// Spans the given vectors (zero and dependent rows are dropped).
  Subspace(std::uint64_t p, std::size_t ambient_dim, const std::vector<Vector>& spanning);

  static Subspace full(std::uint64_t p, std::size_t n);

  std::uint64_t modulus() const { return p_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  /// Coordinates of v in the RREF basis; nullopt if v is outside the span.
  std::optional<Vector> coordinates(std::span<const Residue> v) const;
  bool contains(std::span<const Residue> v) const { return coordinates(v).has_value(); }

  bool operator==(const Subspace& rhs) const = default;

 private:
  std::uint64_t p_;
  std::size_t n_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Right kernel {v : M v = 0}.
Subspace nullspace(const FpMatrix& m);

struct EigenBlock {
  Residue eigenvalue;
  Subspace space;
};

/// Splits an M-invariant subspace into the eigenspaces of M restricted to it,
/// scanning every eigenvalue in GF(p). Blocks are sorted by eigenvalue.
/// Throws InternalError if S is not invariant or the restriction does not
/// diagonalize over GF(p).
std::vector<EigenBlock> eigen_split(const Subspace& s, const FpMatrix& m);

}  // namespace cgl::gfp
