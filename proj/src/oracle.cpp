// Full-enumeration oracle for the arrowing decision. Deliberately
// self-contained: it enumerates pattern placements with its own recursion and
// scans all 2^|E| colourings, so it shares no search code with arrows().

#include <chrono>
#include <cstdint>
#include <functional>

#include "ramsey/arrow.hpp"

namespace ramsey {

namespace {

// Placements as plain edge bitmasks over at most 24 edges.
void collect_placements(const Graph& g, const std::vector<int>& sizes, std::size_t idx,
                        std::vector<int>& chosen_min, std::vector<std::vector<int>>& parts,
                        std::vector<int>& free_vertices, std::vector<std::uint32_t>& out,
                        const std::vector<std::vector<int>>& edge_index) {
  if (idx == sizes.size()) {
    std::uint32_t mask = 0;
    for (const auto& part : parts)
      for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j)
          mask |= std::uint32_t{1} << edge_index[static_cast<std::size_t>(part[i])]
                                               [static_cast<std::size_t>(part[j])];
    out.push_back(mask);
    return;
  }
  int size = sizes[idx];
  int n = g.vertex_count();
  // pick the part's vertex list in ascending order via simple combinations
  std::vector<int> part;
  std::function<void(int)> grow = [&](int from) {
    if (static_cast<int>(part.size()) == size) {
      for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j)
          if (!g.has_edge(part[i], part[j])) return;
      // equal-size parts ordered by first vertex
      if (idx > 0 && sizes[idx - 1] == size && part[0] <= chosen_min[idx - 1]) return;
      bool clash = false;
      for (int v : part)
        if (!free_vertices[static_cast<std::size_t>(v)]) clash = true;
      if (clash) return;
      for (int v : part) free_vertices[static_cast<std::size_t>(v)] = 0;
      parts.push_back(part);
      chosen_min[idx] = part[0];
      collect_placements(g, sizes, idx + 1, chosen_min, parts, free_vertices, out, edge_index);
      parts.pop_back();
      for (int v : part) free_vertices[static_cast<std::size_t>(v)] = 1;
      return;
    }
    for (int v = from; v < n; ++v) {
      if (!free_vertices[static_cast<std::size_t>(v)]) continue;
      part.push_back(v);
      grow(v + 1);
      part.pop_back();
    }
  };
  grow(0);
}

std::uint32_t reverse_bits(std::uint32_t x, int m) {
  std::uint32_t out = 0;
  for (int i = 0; i < m; ++i)
    if ((x >> i) & 1u) out |= std::uint32_t{1} << (m - 1 - i);
  return out;
}

}  // namespace

ArrowResult enumerate_colourings_oracle(const Graph& g, const Pattern& p) {
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  if (m > 24) throw unsupported_size_error("oracle requires at most 24 edges");

  std::vector<std::vector<int>> edge_index(
      static_cast<std::size_t>(g.vertex_count()),
      std::vector<int>(static_cast<std::size_t>(g.vertex_count()), -1));
  for (int e = 0; e < m; ++e) {
    auto [u, v] = edges[static_cast<std::size_t>(e)];
    edge_index[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = e;
    edge_index[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = e;
  }

  std::vector<std::uint32_t> placements;
  if (p.total_vertices() <= g.vertex_count()) {
    std::vector<int> chosen_min(p.sizes.size(), -1);
    std::vector<std::vector<int>> parts;
    std::vector<int> free_vertices(static_cast<std::size_t>(g.vertex_count()), 1);
    collect_placements(g, p.sizes, 0, chosen_min, parts, free_vertices, placements, edge_index);
  }

  auto start = std::chrono::steady_clock::now();
  ArrowResult result;
  const std::uint32_t total = std::uint32_t{1} << m;

  // r counts colourings in lexicographic order (edge 0 most significant,
  // red < blue); b is the blue-edge mask by edge id.
  std::uint64_t scanned = 0;
  for (std::uint32_t r = 0; r < total; ++r) {
    std::uint32_t b = reverse_bits(r, m);
    ++scanned;
    bool mono = false;
    for (std::uint32_t mask : placements) {
      if ((mask & b) == 0 || (mask & b) == mask) {
        mono = true;
        break;
      }
    }
    if (!mono) {
      result.verdict = Verdict::NotArrows;
      Colouring witness(g);
      for (int e = 0; e < m; ++e)
        witness.set(e, ((b >> e) & 1u) ? EdgeColour::Blue : EdgeColour::Red);
      result.witness = std::move(witness);
      break;
    }
  }
  if (!result.witness) result.verdict = Verdict::Arrows;
  result.stats.nodes = scanned;
  result.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace ramsey
