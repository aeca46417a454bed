#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace c4c8 {

// A permutation of {0, ..., degree-1} stored as a dense image table:
// images_[x] is the image of x. Ordering (and therefore every canonical
// ordering in this project) is lexicographic on the image sequence.
class Permutation {
 public:
  Permutation() = default;

  // Validates that `images` is a bijection on {0, ..., images.size()-1};
  // throws std::invalid_argument otherwise.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t degree);

  std::uint32_t degree() const {
    return static_cast<std::uint32_t>(images_.size());
  }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  std::size_t fixed_point_count() const;

  // Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const;

  // Disjoint-cycle notation with fixed points omitted, e.g. "(0 2)(1 3)";
  // the identity renders as "()".
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  // Constructs without bijection validation, for internal results that are
  // bijections by construction (composites, inverses).
  struct Unchecked {};
  Permutation(Unchecked, std::vector<std::uint32_t> images)
      : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<std::uint32_t> images_;
};

// r = p after q, i.e. r(x) = p(q(x)). Juxtaposed generator products in group
// words follow the same convention: the rightmost factor acts first.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

// p^k for any integer k (negative powers go through the inverse).
Permutation power(const Permutation& p, std::int64_t k);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace c4c8
