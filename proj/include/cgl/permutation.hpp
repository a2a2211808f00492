#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <vector>

namespace cgl {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidParameter unless images is a bijection on [0, size).
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Same permutation on a larger point set, extra points fixed.
  Permutation extended(std::size_t degree) const;

  /// Non-trivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

/// (p * q)(x) = p(q(x)); the right factor acts first.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation power(const Permutation& g, std::uint64_t exponent);

/// Least m >= 1 with g^m = 1, i.e. the lcm of the cycle lengths.
std::uint64_t element_order(const Permutation& g);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace cgl
