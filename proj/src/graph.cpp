#include "ramsey/graph.hpp"

#include <algorithm>
#include <numeric>

namespace ramsey {

std::vector<int> set_vertices(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw unsupported_size_error("vertex count out of range 0..64");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw error("vertex index out of range");
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(adj_[static_cast<std::size_t>(v)]);
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw error("self-loops are not allowed");
  adj_[static_cast<std::size_t>(u)] |= VertexSet{1} << v;
  adj_[static_cast<std::size_t>(v)] |= VertexSet{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u)] &= ~(VertexSet{1} << v);
  adj_[static_cast<std::size_t>(v)] &= ~(VertexSet{1} << u);
}

VertexSet Graph::all_vertices() const {
  return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t row = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
    while (row) {
      int v = std::countr_zero(row);
      out.emplace_back(u, v);
      row &= row - 1;
    }
  }
  return out;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::k8_minus_c5() {
  Graph g = complete(8);
  for (int v = 0; v < 5; ++v) g.remove_edge(v, (v + 1) % 5);
  return g;
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s & ~g.all_vertices()) throw error("vertex set not contained in graph");
  std::vector<int> vs = set_vertices(s);
  Graph out(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw error("edge not present");
  Graph out = g;
  out.remove_edge(u, v);
  return out;
}

namespace {

// Classic candidate-set expansion; candidates restricted to higher-numbered
// vertices keeps every clique enumerated once.
int max_clique_rec(const Graph& g, VertexSet cand, int depth, int best) {
  if (std::popcount(cand) + depth <= best) return best;
  VertexSet rest = cand;
  while (rest) {
    if (std::popcount(rest) + depth <= best) break;
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    best = max_clique_rec(g, rest & g.neighbours(v), depth + 1, best);
  }
  if (depth > best) best = depth;
  return best;
}

bool find_clique_rec(const Graph& g, VertexSet cand, VertexSet cur, int need, VertexSet* out) {
  if (need == 0) {
    *out = cur;
    return true;
  }
  if (std::popcount(cand) < need) return false;
  VertexSet rest = cand;
  while (rest) {
    if (std::popcount(rest) < need) return false;
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (find_clique_rec(g, rest & g.neighbours(v), cur | (VertexSet{1} << v), need - 1, out))
      return true;
  }
  return false;
}

}  // namespace

int max_clique_size(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  return max_clique_rec(g, g.all_vertices(), 0, 0);
}

std::optional<VertexSet> find_clique(const Graph& g, int k) {
  if (k < 1) throw error("clique size must be at least 1");
  if (k > g.vertex_count()) return std::nullopt;
  VertexSet out = 0;
  if (find_clique_rec(g, g.all_vertices(), 0, k, &out)) return out;
  return std::nullopt;
}

namespace {

// Adjacency bits in graph6 column order: (0,1),(0,2),(1,2),(0,3),...
template <typename F>
void for_each_g6_pair(int n, F&& f) {
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) f(u, v);
}

}  // namespace

Graph canonical_form(const Graph& g) {
  int n = g.vertex_count();
  if (n > 10) throw unsupported_size_error("canonical_form is capped at 10 vertices");
  if (n <= 1) return g;

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(n * (n - 1) / 2));

  do {
    std::size_t k = 0;
    bool worse = false, better = best.empty();
    for (int v = 1; v < n && !worse; ++v) {
      for (int u = 0; u < v; ++u, ++k) {
        std::uint8_t bit = g.has_edge(perm[static_cast<std::size_t>(u)],
                                      perm[static_cast<std::size_t>(v)])
                               ? 1
                               : 0;
        cur[k] = bit;
        if (!better) {
          if (bit > best[k]) {
            worse = true;
            break;
          }
          if (bit < best[k]) better = true;
        }
      }
    }
    if (!worse && better) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));

  Graph out(n);
  std::size_t k = 0;
  for_each_g6_pair(n, [&](int u, int v) {
    if (best[k++]) out.add_edge(u, v);
  });
  return out;
}

std::string write_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > kMaxVertices) throw unsupported_size_error("graph6 writer is capped at 64 vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int bits = 0, acc = 0;
  for_each_g6_pair(n, [&](int u, int v) {
    acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
    if (++bits == 6) {
      out.push_back(static_cast<char>(acc + 63));
      bits = 0;
      acc = 0;
    }
  });
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw parse_error("empty graph6 string", 0);
  std::size_t pos = 0;
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw parse_error("graph6 string truncated", i);
    int b = static_cast<unsigned char>(text[i]);
    if (b < 63 || b > 126) throw parse_error("graph6 byte out of range", i);
    return b - 63;
  };

  int n;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~')
      throw parse_error("graph6 vertex count exceeds 64", 1);
    n = (byte_at(1) << 12) | (byte_at(2) << 6) | byte_at(3);
    pos = 4;
  } else {
    n = byte_at(0);
    pos = 1;
  }
  if (n > kMaxVertices) throw parse_error("graph6 vertex count exceeds 64", 0);

  int pairs = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() > pos + need) throw parse_error("trailing garbage after graph6 data", pos + need);

  Graph g(n);
  int bit_index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit_index) {
      int b = byte_at(pos + static_cast<std::size_t>(bit_index / 6));
      if ((b >> (5 - bit_index % 6)) & 1) g.add_edge(u, v);
    }
  }
  // padding bits must be zero
  if (pairs % 6 != 0 && need > 0) {
    int last = byte_at(pos + need - 1);
    int pad = 6 - pairs % 6;
    if (last & ((1 << pad) - 1)) throw parse_error("nonzero padding bits", pos + need - 1);
  }
  return g;
}

}  // namespace ramsey
