#include "c4c8/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace c4c8::kernels {

namespace {

struct Vtable {
  Backend backend;
  void (*compose)(const std::uint32_t*, const std::uint32_t*, std::uint32_t*,
                  std::size_t);
  std::size_t (*count_fixed_points)(const std::uint32_t*, std::size_t);
  bool (*is_identity)(const std::uint32_t*, std::size_t);
};

Vtable make_vtable(Backend b) {
#if defined(__x86_64__) || defined(_M_X64)
  if (b == Backend::kAvx2)
    return {Backend::kAvx2, &avx2::compose, &avx2::count_fixed_points,
            &avx2::is_identity};
#endif
  return {Backend::kScalar, &scalar::compose, &scalar::count_fixed_points,
          &scalar::is_identity};
}

Backend detect_backend() {
  // Env override is best-effort: unknown or unsupported values fall back to
  // scalar rather than aborting the process.
  if (const char* env = std::getenv("C4C8_KERNELS")) {
    const std::string requested(env);
    if (requested == "scalar") return Backend::kScalar;
    if (requested == "avx2" && cpu_supports_avx2()) return Backend::kAvx2;
    if (!requested.empty() && requested != "auto") return Backend::kScalar;
  }
  return cpu_supports_avx2() ? Backend::kAvx2 : Backend::kScalar;
}

Vtable& vtable() {
  static Vtable v = make_vtable(detect_backend());
  return v;
}

}  // namespace

bool cpu_supports_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

Backend active_backend() { return vtable().backend; }

void force_backend(Backend b) {
  if (b == Backend::kAvx2 && !cpu_supports_avx2())
    throw std::invalid_argument("avx2 backend not supported on this CPU");
  vtable() = make_vtable(b);
}

void compose(const std::uint32_t* outer, const std::uint32_t* inner,
             std::uint32_t* out, std::size_t n) {
  vtable().compose(outer, inner, out, n);
}

std::size_t count_fixed_points(const std::uint32_t* p, std::size_t n) {
  return vtable().count_fixed_points(p, n);
}

bool is_identity(const std::uint32_t* p, std::size_t n) {
  return vtable().is_identity(p, n);
}

}  // namespace c4c8::kernels
