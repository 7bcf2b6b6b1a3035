#include <cstdlib>
#include <cstring>

#include "cswitch/kernels.hpp"

namespace cswitch::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& active_table() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("CSWITCH_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_table();
    if (avx2_available()) {
      if (const KernelTable* t = avx2_table()) return t;
    }
    return &scalar_table();
  }();
  return *chosen;
}

}  // namespace cswitch::kernels
