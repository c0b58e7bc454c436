#include <bit>

#include "ramsey/kernels.hpp"

namespace ramsey::kernels {

namespace {

std::size_t find_subset_scalar(const std::uint64_t* masks, std::size_t count, std::size_t words,
                               const std::uint64_t* have) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* m = masks + i * words;
    std::uint64_t out = 0;
    for (std::size_t w = 0; w < words; ++w) out |= m[w] & ~have[w];
    if (out == 0) return i;
  }
  return npos;
}

ScanResult min_missing_scalar(const std::uint64_t* masks, std::size_t count, std::size_t words,
                              const std::uint64_t* avoid, const std::uint64_t* have) {
  ScanResult best;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* m = masks + i * words;
    std::uint64_t conflict = 0;
    int missing = 0;
    for (std::size_t w = 0; w < words; ++w) {
      conflict |= m[w] & avoid[w];
      missing += std::popcount(m[w] & ~have[w]);
    }
    if (conflict) continue;
    if (missing < best.missing) {
      best.index = i;
      best.missing = missing;
      if (missing == 0) return best;
    }
  }
  return best;
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend b{"scalar", &find_subset_scalar, &min_missing_scalar};
  return b;
}

}  // namespace ramsey::kernels
