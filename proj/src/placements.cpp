#include "ramsey/placements.hpp"

#include <functional>

namespace ramsey {

namespace {

inline VertexSet above(int v) {
  // all vertices strictly greater than v
  if (v < 0) return ~VertexSet{0};
  return v >= 63 ? 0 : ~((VertexSet{2} << v) - 1);
}

// Enumerate cliques of `size` vertices, all inside `allowed`, all above
// `min_vertex`, ascending. emit returning false stops the enumeration.
template <typename F>
bool enumerate_cliques(const Graph& g, int size, VertexSet allowed, VertexSet cur, int min_vertex,
                       F&& emit) {
  if (size == 0) return emit(cur);
  VertexSet cand = allowed & above(min_vertex);
  while (cand) {
    if (std::popcount(cand) < size) return true;
    int v = lowest_vertex(cand);
    cand &= cand - 1;
    if (!enumerate_cliques(g, size - 1, allowed & g.neighbours(v), cur | (VertexSet{1} << v), v,
                           emit))
      return false;
  }
  return true;
}

struct PartEnumerator {
  const Graph& g;
  const std::vector<int>& sizes;
  std::function<bool(const std::vector<VertexSet>&)> emit;  // false = stop
  std::vector<VertexSet> parts;

  bool run(std::size_t idx, VertexSet used) {
    if (idx == sizes.size()) return emit(parts);
    int size = sizes[idx];
    // equal-size parts are ordered by their minimum vertex, so each unordered
    // placement is produced exactly once
    int floor_vertex = -1;
    if (idx > 0 && sizes[idx - 1] == size) floor_vertex = lowest_vertex(parts[idx - 1]);
    VertexSet allowed = g.all_vertices() & ~used;
    auto on_clique = [&](VertexSet clique) {
      parts[idx] = clique;
      return run(idx + 1, used | clique);
    };
    return enumerate_cliques(g, size, allowed, 0, floor_vertex, on_clique);
  }
};

}  // namespace

std::vector<Placement> pattern_placements(const Graph& g, const Pattern& p) {
  std::vector<Placement> out;
  if (p.total_vertices() > g.vertex_count()) return out;
  Colouring index(g);  // borrow the edge-id table
  PartEnumerator en{g, p.sizes, {}, std::vector<VertexSet>(p.sizes.size())};
  en.emit = [&](const std::vector<VertexSet>& parts) {
    Placement pl;
    pl.parts = parts;
    for (VertexSet part : parts) {
      std::vector<int> vs = set_vertices(part);
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          pl.edge_ids.push_back(index.edge_id(vs[i], vs[j]));
    }
    out.push_back(std::move(pl));
    return true;
  };
  en.run(0, 0);
  return out;
}

std::size_t count_placements(const Graph& g, const Pattern& p, std::size_t limit) {
  if (p.total_vertices() > g.vertex_count()) return 0;
  std::size_t count = 0;
  PartEnumerator en{g, p.sizes, {}, std::vector<VertexSet>(p.sizes.size())};
  en.emit = [&](const std::vector<VertexSet>&) { return ++count <= limit; };
  en.run(0, 0);
  return count;
}

std::optional<std::vector<VertexSet>> find_clique_union(const Graph& g, const Pattern& p) {
  if (p.total_vertices() > g.vertex_count()) return std::nullopt;
  std::optional<std::vector<VertexSet>> found;
  PartEnumerator en{g, p.sizes, {}, std::vector<VertexSet>(p.sizes.size())};
  en.emit = [&](const std::vector<VertexSet>& parts) {
    found = parts;
    return false;
  };
  en.run(0, 0);
  return found;
}

}  // namespace ramsey
