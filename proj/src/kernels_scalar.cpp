#include "c4c8/kernels.hpp"

namespace c4c8::kernels::scalar {

void compose(const std::uint32_t* outer, const std::uint32_t* inner,
             std::uint32_t* out, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) out[x] = outer[inner[x]];
}

std::size_t count_fixed_points(const std::uint32_t* p, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < n; ++x) count += (p[x] == x);
  return count;
}

bool is_identity(const std::uint32_t* p, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x)
    if (p[x] != x) return false;
  return true;
}

}  // namespace c4c8::kernels::scalar
