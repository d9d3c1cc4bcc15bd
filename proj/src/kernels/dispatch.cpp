#include <cstdlib>
#include <string_view>

#include "crp/kernels/kernels.hpp"
#include "kernels_detail.hpp"

namespace crp::kernels {

const KernelTable* avx2_table() noexcept {
#if defined(CRP_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported) return &detail::avx2_kernels();
#endif
  return nullptr;
}

const KernelTable& active() noexcept {
  static const KernelTable& chosen = [&]() -> const KernelTable& {
    const char* forced = std::getenv("CRP_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_table();
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

}  // namespace crp::kernels
