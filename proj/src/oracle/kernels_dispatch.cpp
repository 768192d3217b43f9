#include <cstdlib>
#include <string_view>

#include "abel_cycles/oracle/kernels.hpp"

namespace abel_cycles::oracle {

namespace {

bool scalar_forced() {
  const char* env = std::getenv("ABEL_CYCLES_KERNEL");
  return env != nullptr && std::string_view(env) == "scalar";
}

}  // namespace

bool avx2_kernel_available() {
#if defined(ABEL_CYCLES_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

BatchKernel select_kernel() {
#ifdef ABEL_CYCLES_HAVE_AVX2_KERNEL
  if (!scalar_forced() && avx2_kernel_available()) return &integrate_batch_avx2;
#endif
  return &integrate_batch_scalar;
}

std::string selected_kernel_name() {
  return select_kernel() == &integrate_batch_scalar ? "scalar" : "avx2";
}

}  // namespace abel_cycles::oracle
