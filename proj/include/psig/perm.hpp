#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace psig {

/// A permutation of the points 0..d-1, stored as its image array.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> images)
      : images_(std::move(images)) {
    if (images_.empty())
      throw std::invalid_argument("Permutation: degree must be positive");
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t v : images_) {
      if (v >= images_.size() || seen[v])
        throw std::invalid_argument("Permutation: image array is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::uint32_t degree) {
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    return Permutation(std::move(images));
  }

  /// Convenience for tests and family constructors: product of disjoint
  /// cycles, e.g. {{0,1,2},{3,4}} at degree 5.
  static Permutation from_cycles(std::uint32_t degree,
                                 std::initializer_list<std::vector<std::uint32_t>> cycles) {
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        std::uint32_t from = cycle[i];
        std::uint32_t to = cycle[(i + 1) % cycle.size()];
        if (from >= degree || to >= degree)
          throw std::invalid_argument("from_cycles: point out of range");
        images[from] = to;
      }
    }
    return Permutation(std::move(images));
  }

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }

  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }

  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const {
    for (std::uint32_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// Least m >= 1 with p^m = identity: the lcm of the cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t result = 1;
    for (std::uint32_t start = 0; start < images_.size(); ++start) {
      if (seen[start]) continue;
      std::uint64_t length = 0;
      std::uint32_t point = start;
      do {
        seen[point] = true;
        point = images_[point];
        ++length;
      } while (point != start);
      result = std::lcm(result, length);
    }
    return result;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<std::uint32_t> images_;
};

/// (a o b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<std::uint32_t> images(a.degree());
  for (std::uint32_t i = 0; i < a.degree(); ++i) images[i] = a(b(i));
  return Permutation(std::move(images));
}

inline std::uint64_t element_order(const Permutation& p) { return p.order(); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    // FNV-1a over the image words.
    std::uint64_t h = 14695981039346656037ULL;
    for (std::uint32_t v : p.images()) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace psig
