#include <atomic>
#include <cstdlib>
#include <cstring>

#include "ramsey/kernels.hpp"

namespace ramsey::kernels {

#if defined(RAMSEY_KERNEL_AVX2)
const Backend* avx2_backend_impl();
#endif
#if defined(RAMSEY_KERNEL_NEON)
const Backend* neon_backend_impl();
#endif

const Backend* avx2_backend() {
#if defined(RAMSEY_KERNEL_AVX2)
  return avx2_backend_impl();
#else
  return nullptr;
#endif
}

const Backend* neon_backend() {
#if defined(RAMSEY_KERNEL_NEON)
  return neon_backend_impl();
#else
  return nullptr;
#endif
}

std::vector<const Backend*> available_backends() {
  std::vector<const Backend*> out{&scalar_backend()};
  if (const Backend* b = avx2_backend()) out.push_back(b);
  if (const Backend* b = neon_backend()) out.push_back(b);
  return out;
}

namespace {

std::atomic<const Backend*> g_active{nullptr};

const Backend* pick_default() {
  if (const char* env = std::getenv("RAMSEY_KERNELS")) {
    for (const Backend* b : available_backends())
      if (std::strcmp(env, b->name) == 0) return b;
    return &scalar_backend();  // unknown or unavailable name: fall back
  }
  if (const Backend* b = avx2_backend()) return b;
  if (const Backend* b = neon_backend()) return b;
  return &scalar_backend();
}

}  // namespace

const Backend& active_backend() {
  const Backend* b = g_active.load(std::memory_order_acquire);
  if (!b) {
    b = pick_default();
    g_active.store(b, std::memory_order_release);
  }
  return *b;
}

void set_active_backend(const Backend& b) { g_active.store(&b, std::memory_order_release); }

}  // namespace ramsey::kernels
