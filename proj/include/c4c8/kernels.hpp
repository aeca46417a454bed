#pragma once

#include <cstddef>
#include <cstdint>

// Dense-array kernels behind the permutation engine. Permutations are stored
// as image tables (p[x] = image of x), so composition is a gather and the
// identity/fixed-point scans are element-wise compares -- all data-parallel.
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The backend is chosen once per process from the CPU features, and
// can be overridden with the environment variable C4C8_KERNELS=scalar|avx2
// or programmatically via force_backend() (tests use both).
namespace c4c8::kernels {

enum class Backend { kScalar, kAvx2 };

const char* backend_name(Backend b);

// The backend currently in use for this process.
Backend active_backend();

// Forces a backend; throws std::invalid_argument if this CPU cannot run it.
void force_backend(Backend b);

bool cpu_supports_avx2();

// out[x] = outer[inner[x]] for x in [0, n). All inner values must be < n;
// out must not alias either input.
void compose(const std::uint32_t* outer, const std::uint32_t* inner,
             std::uint32_t* out, std::size_t n);

// Number of x in [0, n) with p[x] == x.
std::size_t count_fixed_points(const std::uint32_t* p, std::size_t n);

// True iff p[x] == x for all x in [0, n).
bool is_identity(const std::uint32_t* p, std::size_t n);

// Reference implementations, exposed so the equivalence tests can pin the
// dispatched kernels against them.
namespace scalar {
void compose(const std::uint32_t* outer, const std::uint32_t* inner,
             std::uint32_t* out, std::size_t n);
std::size_t count_fixed_points(const std::uint32_t* p, std::size_t n);
bool is_identity(const std::uint32_t* p, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void compose(const std::uint32_t* outer, const std::uint32_t* inner,
             std::uint32_t* out, std::size_t n);
std::size_t count_fixed_points(const std::uint32_t* p, std::size_t n);
bool is_identity(const std::uint32_t* p, std::size_t n);
}  // namespace avx2
#endif

}  // namespace c4c8::kernels
