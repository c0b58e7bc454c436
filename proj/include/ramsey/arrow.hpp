#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

enum class Verdict : std::uint8_t { Arrows, NotArrows };

struct ArrowStats {
  std::uint64_t nodes = 0;
  double millis = 0.0;
};

struct ArrowResult {
  Verdict verdict = Verdict::Arrows;
  std::optional<Colouring> witness;  // present iff NotArrows; lexicographically
                                     // first avoiding colouring (Red < Blue)
  ArrowStats stats;
};

struct ArrowOptions {
  int threads = 1;
  // Placement lists are precomputed up to this many placements; beyond it the
  // search re-detects monochromatic copies on the fly.
  std::size_t placement_limit = 1'000'000;
  // Bulk scans may skip witness extraction; the result then carries no
  // witness even on NotArrows.
  bool want_witness = true;
  enum class Branch : std::uint8_t { MostConstrained, LowestIndex };
  Branch branch = Branch::MostConstrained;
};

// Monochromatic placement of the pattern in a total colouring. With no colour
// given, red is tried first.
std::optional<std::pair<Colour, std::vector<VertexSet>>> find_mono(
    const Colouring& c, const Pattern& p, std::optional<Colour> colour = std::nullopt);

// Exact decision of g -> p over all red/blue edge colourings.
ArrowResult arrows(const Graph& g, const Pattern& p, const ArrowOptions& opts = {});

// Asymmetric variant: every colouring holds a red copy of `red` or a blue
// copy of `blue`.
ArrowResult arrows_pair(const Graph& g, const Pattern& red, const Pattern& blue,
                        const ArrowOptions& opts = {});

// Independent oracle: full enumeration of all 2^|E| colourings (|E| <= 24),
// self-contained placement detection. Same verdict and witness as arrows.
ArrowResult enumerate_colourings_oracle(const Graph& g, const Pattern& p);

struct MinimalityReport {
  bool is_ramsey = false;
  std::vector<std::pair<int, int>> critical_edges;  // deletion breaks arrowing
  bool is_minimal = false;
};

MinimalityReport is_ramsey_minimal(const Graph& g, const Pattern& p, const ArrowOptions& opts = {});

}  // namespace ramsey
