#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace ramsey::kernels {

// Placement scans over flat arrays of edge bitmasks. Each placement occupies
// `words` consecutive 64-bit words; the array holds `count` placements.
//
// find_subset: first index i with mask_i & ~have == 0 (placement fully inside
// `have`), or npos.
//
// min_missing: over placements with mask_i & avoid == 0, minimise
// popcount(mask_i & ~have); returns the first index attaining the minimum.
// Placements intersecting `avoid` are dead and skipped. No live placement
// yields {npos, unbounded}.

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
inline constexpr int unbounded_missing = std::numeric_limits<int>::max();

struct ScanResult {
  std::size_t index = npos;
  int missing = unbounded_missing;
};

using FindSubsetFn = std::size_t (*)(const std::uint64_t* masks, std::size_t count,
                                     std::size_t words, const std::uint64_t* have);
using MinMissingFn = ScanResult (*)(const std::uint64_t* masks, std::size_t count,
                                    std::size_t words, const std::uint64_t* avoid,
                                    const std::uint64_t* have);

struct Backend {
  const char* name;
  FindSubsetFn find_subset;
  MinMissingFn min_missing;
};

const Backend& scalar_backend();
const Backend* avx2_backend();  // nullptr when not compiled in or CPU lacks AVX2
const Backend* neon_backend();  // nullptr off aarch64

// Every backend usable on this machine, scalar first.
std::vector<const Backend*> available_backends();

// Dispatch: best available by default; RAMSEY_KERNELS=scalar|avx2|neon
// overrides, as does set_active_backend.
const Backend& active_backend();
void set_active_backend(const Backend& b);

}  // namespace ramsey::kernels
