// NEON variants, two placements per 128-bit vector in the words==1 case.

#include <arm_neon.h>

#include <bit>

#include "ramsey/kernels.hpp"

namespace ramsey::kernels {

namespace {

inline std::uint64_t lane_popcount(uint64x2_t v, int lane) {
  uint8x16_t bytes = vreinterpretq_u8_u64(v);
  uint8x16_t cnt = vcntq_u8(bytes);
  uint64x2_t sums = vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(cnt)));
  return lane == 0 ? vgetq_lane_u64(sums, 0) : vgetq_lane_u64(sums, 1);
}

std::size_t find_subset_neon(const std::uint64_t* masks, std::size_t count, std::size_t words,
                             const std::uint64_t* have) {
  if (words == 1) {
    uint64x2_t nothave = vdupq_n_u64(~have[0]);
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
      uint64x2_t m = vld1q_u64(masks + i);
      uint64x2_t out = vandq_u64(m, nothave);
      if (vgetq_lane_u64(out, 0) == 0) return i;
      if (vgetq_lane_u64(out, 1) == 0) return i + 1;
    }
    for (; i < count; ++i)
      if ((masks[i] & ~have[0]) == 0) return i;
    return npos;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* m = masks + i * words;
    std::uint64_t out = 0;
    for (std::size_t w = 0; w < words; ++w) out |= m[w] & ~have[w];
    if (out == 0) return i;
  }
  return npos;
}

ScanResult min_missing_neon(const std::uint64_t* masks, std::size_t count, std::size_t words,
                            const std::uint64_t* avoid, const std::uint64_t* have) {
  ScanResult best;
  if (words == 1) {
    uint64x2_t avoidv = vdupq_n_u64(avoid[0]);
    uint64x2_t nothave = vdupq_n_u64(~have[0]);
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
      uint64x2_t m = vld1q_u64(masks + i);
      uint64x2_t conf = vandq_u64(m, avoidv);
      uint64x2_t miss = vandq_u64(m, nothave);
      for (int lane = 0; lane < 2; ++lane) {
        std::uint64_t c = lane == 0 ? vgetq_lane_u64(conf, 0) : vgetq_lane_u64(conf, 1);
        if (c) continue;
        int missing = static_cast<int>(lane_popcount(miss, lane));
        if (missing < best.missing) {
          best.index = i + static_cast<std::size_t>(lane);
          best.missing = missing;
          if (missing == 0) return best;
        }
      }
    }
    for (; i < count; ++i) {
      if (masks[i] & avoid[0]) continue;
      int missing = std::popcount(masks[i] & ~have[0]);
      if (missing < best.missing) {
        best.index = i;
        best.missing = missing;
        if (missing == 0) return best;
      }
    }
    return best;
  }
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

const Backend* neon_backend_impl() {
  static const Backend b{"neon", &find_subset_neon, &min_missing_neon};
  return &b;
}

}  // namespace ramsey::kernels
