#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

// A vertex subset of a graph on at most 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= VertexSet{1} << v;
  return s;
}
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }
std::vector<int> set_vertices(VertexSet s);

// Simple undirected graph, adjacency kept as one 64-bit row per vertex.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  std::uint64_t neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet all_vertices() const;
  int degree(int v) const { return std::popcount(neighbours(v)); }

  // Edges as (u,v) with u < v, lexicographically sorted. This is the fixed
  // edge order used for edge ids, witnesses and CNF variables.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

  static Graph complete(int n);
  static Graph cycle(int n);
  // K_8 minus the 5-cycle (0,1),(1,2),(2,3),(3,4),(4,0).
  static Graph k8_minus_c5();

private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph delete_edge(const Graph& g, int u, int v);

int max_clique_size(const Graph& g);
std::optional<VertexSet> find_clique(const Graph& g, int k);

// Lexicographically least adjacency encoding over all relabellings.
// Brute-force permutation scan, capped at 10 vertices.
Graph canonical_form(const Graph& g);

// graph6 (header-less, standard encoding, n <= 64).
std::string write_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

}  // namespace ramsey
