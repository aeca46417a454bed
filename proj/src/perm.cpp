#include "c4c8/perm.hpp"

#include <numeric>
#include <stdexcept>

#include "c4c8/kernels.hpp"

namespace c4c8 {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t img : images_) {
    if (img >= images_.size())
      throw std::invalid_argument("permutation image out of range");
    if (seen[img])
      throw std::invalid_argument("permutation image table is not a bijection");
    seen[img] = true;
  }
}

Permutation Permutation::identity(std::uint32_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), 0u);
  return p;
}

bool Permutation::is_identity() const {
  return kernels::is_identity(images_.data(), images_.size());
}

std::size_t Permutation::fixed_point_count() const {
  return kernels::count_fixed_points(images_.data(), images_.size());
}

std::uint64_t Permutation::order() const {
  std::vector<bool> visited(images_.size(), false);
  std::uint64_t result = 1;
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    std::uint64_t length = 0;
    for (std::uint32_t x = start; !visited[x]; x = images_[x]) {
      visited[x] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::string Permutation::cycle_string() const {
  std::vector<bool> visited(images_.size(), false);
  std::string out;
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (visited[start] || images_[start] == start) {
      visited[start] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (std::uint32_t x = start; !visited[x]; x = images_[x]) {
      visited[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<std::uint32_t> out(p.degree());
  kernels::compose(p.images().data(), q.images().data(), out.data(),
                   out.size());
  return Permutation(Permutation::Unchecked{}, std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::uint32_t> out(p.degree());
  for (std::uint32_t x = 0; x < p.degree(); ++x) out[p(x)] = x;
  return Permutation(Permutation::Unchecked{}, std::move(out));
}

Permutation power(const Permutation& p, std::int64_t k) {
  Permutation base = k < 0 ? inverse(p) : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                          : static_cast<std::uint64_t>(k);
  Permutation acc = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  // FNV-1a over the image words; stable across platforms for a given degree.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t img : p.images()) {
    h ^= img;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace c4c8
