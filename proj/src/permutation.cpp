#include "cgl/permutation.hpp"

#include <numeric>
#include <string>

#include "cgl/errors.hpp"

namespace cgl {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidParameter("image list is not a bijection on " + std::to_string(images_.size()) +
                             " points");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point x = cycle[i];
      if (x >= degree)
        throw InvalidParameter("cycle point " + std::to_string(x) + " outside degree " +
                               std::to_string(degree));
      if (used[x]) throw InvalidParameter("cycles are not disjoint at point " + std::to_string(x));
      used[x] = true;
      p.images_[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) throw InvalidParameter("cannot shrink a permutation's degree");
  Permutation p = identity(degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InvalidParameter("cannot compose permutations of degree " + std::to_string(p.degree()) +
                           " and " + std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = p(q(static_cast<Point>(x)));
  return Permutation(std::move(images));
}

Permutation power(const Permutation& g, std::uint64_t exponent) {
  Permutation result = Permutation::identity(g.degree());
  Permutation base = g;
  while (exponent > 0) {
    if (exponent & 1) result = compose(result, base);
    base = compose(base, base);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t element_order(const Permutation& g) {
  std::uint64_t order = 1;
  for (const auto& cycle : g.cycles()) order = std::lcm(order, std::uint64_t{cycle.size()});
  return order;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  const auto cs = p.cycles();
  if (cs.empty()) return os << "()";
  for (const auto& cycle : cs) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? "," : "") << cycle[i];
    os << ')';
  }
  return os;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace cgl
