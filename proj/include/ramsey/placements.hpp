#pragma once

#include <optional>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

// One way to place a clique-union pattern into a graph: vertex-disjoint
// cliques with the pattern's sizes, plus the union of their edges by edge id.
struct Placement {
  std::vector<VertexSet> parts;
  std::vector<int> edge_ids;
};

// Every placement of the pattern, each listed once (placements that differ
// only by the order of equal-size parts are identified). Deterministic order.
std::vector<Placement> pattern_placements(const Graph& g, const Pattern& p);

// Count placements without materialising them, stopping at `limit` + 1.
std::size_t count_placements(const Graph& g, const Pattern& p, std::size_t limit);

// Search for one placement of vertex-disjoint cliques of the given sizes.
std::optional<std::vector<VertexSet>> find_clique_union(const Graph& g, const Pattern& p);

}  // namespace ramsey
