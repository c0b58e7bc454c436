// AVX2 variants of the placement scans. words==1 is the common case (graphs
// up to 64 edges): four placements per vector. Wider placements fall back to
// vectorising across words of a single placement.

#include <immintrin.h>

#include <bit>

#include "ramsey/kernels.hpp"

namespace ramsey::kernels {

namespace {

// Per-64-bit-lane popcount via the nibble-LUT + psadbw trick.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2,
                                       1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

std::size_t find_subset_avx2(const std::uint64_t* masks, std::size_t count, std::size_t words,
                             const std::uint64_t* have) {
  if (words == 1) {
    const __m256i nothave = _mm256_set1_epi64x(static_cast<long long>(~have[0]));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
      __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
      __m256i out = _mm256_and_si256(m, nothave);
      int eq = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(out, zero)));
      if (eq) return i + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(eq)));
    }
    for (; i < count; ++i)
      if ((masks[i] & ~have[0]) == 0) return i;
    return npos;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* m = masks + i * words;
    __m256i acc = _mm256_setzero_si256();
    std::size_t w = 0;
    for (; w + 4 <= words; w += 4) {
      __m256i mv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + w));
      __m256i hv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(have + w));
      acc = _mm256_or_si256(acc, _mm256_andnot_si256(hv, mv));
    }
    std::uint64_t rest = static_cast<std::uint64_t>(!_mm256_testz_si256(acc, acc));
    for (; w < words; ++w) rest |= m[w] & ~have[w];
    if (rest == 0) return i;
  }
  return npos;
}

ScanResult min_missing_avx2(const std::uint64_t* masks, std::size_t count, std::size_t words,
                            const std::uint64_t* avoid, const std::uint64_t* have) {
  ScanResult best;
  if (words == 1) {
    const __m256i avoidv = _mm256_set1_epi64x(static_cast<long long>(avoid[0]));
    const __m256i nothave = _mm256_set1_epi64x(static_cast<long long>(~have[0]));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    alignas(32) std::uint64_t cnt[4];
    for (; i + 4 <= count; i += 4) {
      __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
      int live = _mm256_movemask_pd(
          _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(m, avoidv), zero)));
      if (!live) continue;
      _mm256_store_si256(reinterpret_cast<__m256i*>(cnt),
                         popcount_epi64(_mm256_and_si256(m, nothave)));
      for (int lane = 0; lane < 4; ++lane) {
        if (!((live >> lane) & 1)) continue;
        int missing = static_cast<int>(cnt[lane]);
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
    __m256i confv = _mm256_setzero_si256();
    __m256i missv = _mm256_setzero_si256();
    std::size_t w = 0;
    for (; w + 4 <= words; w += 4) {
      __m256i mv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + w));
      __m256i av = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(avoid + w));
      __m256i hv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(have + w));
      confv = _mm256_or_si256(confv, _mm256_and_si256(mv, av));
      missv = _mm256_add_epi64(missv, popcount_epi64(_mm256_andnot_si256(hv, mv)));
    }
    std::uint64_t conflict = static_cast<std::uint64_t>(!_mm256_testz_si256(confv, confv));
    alignas(32) std::uint64_t acc[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(acc), missv);
    int missing = static_cast<int>(acc[0] + acc[1] + acc[2] + acc[3]);
    for (; w < words; ++w) {
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

const Backend* avx2_backend_impl() {
  static const Backend b{"avx2", &find_subset_avx2, &min_missing_avx2};
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  return &b;
}

}  // namespace ramsey::kernels
