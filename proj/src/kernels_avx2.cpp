// AVX2 variants. This translation unit is compiled with -mavx2 and is only
// added to the build on x86-64; callers reach it through the dispatch table
// in kernels.cpp, never directly.
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "c4c8/kernels.hpp"

namespace c4c8::kernels::avx2 {

namespace {

inline __m256i lane_indices(std::size_t base) {
  return _mm256_setr_epi32(
      static_cast<int>(base + 0), static_cast<int>(base + 1),
      static_cast<int>(base + 2), static_cast<int>(base + 3),
      static_cast<int>(base + 4), static_cast<int>(base + 5),
      static_cast<int>(base + 6), static_cast<int>(base + 7));
}

}  // namespace

void compose(const std::uint32_t* outer, const std::uint32_t* inner,
             std::uint32_t* out, std::size_t n) {
  std::size_t x = 0;
  for (; x + 8 <= n; x += 8) {
    const __m256i idx =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(inner + x));
    const __m256i gathered = _mm256_i32gather_epi32(
        reinterpret_cast<const int*>(outer), idx, sizeof(std::uint32_t));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + x), gathered);
  }
  for (; x < n; ++x) out[x] = outer[inner[x]];
}

std::size_t count_fixed_points(const std::uint32_t* p, std::size_t n) {
  std::size_t count = 0;
  std::size_t x = 0;
  __m256i iota = lane_indices(0);
  const __m256i step = _mm256_set1_epi32(8);
  for (; x + 8 <= n; x += 8) {
    const __m256i v =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + x));
    const __m256i eq = _mm256_cmpeq_epi32(v, iota);
    // One mask bit per 32-bit lane.
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(eq));
    count += static_cast<std::size_t>(__builtin_popcount(mask));
    iota = _mm256_add_epi32(iota, step);
  }
  for (; x < n; ++x) count += (p[x] == x);
  return count;
}

bool is_identity(const std::uint32_t* p, std::size_t n) {
  std::size_t x = 0;
  __m256i iota = lane_indices(0);
  const __m256i step = _mm256_set1_epi32(8);
  for (; x + 8 <= n; x += 8) {
    const __m256i v =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + x));
    const __m256i eq = _mm256_cmpeq_epi32(v, iota);
    if (_mm256_movemask_epi8(eq) != -1) return false;
    iota = _mm256_add_epi32(iota, step);
  }
  for (; x < n; ++x)
    if (p[x] != x) return false;
  return true;
}

}  // namespace c4c8::kernels::avx2

#endif  // x86-64
