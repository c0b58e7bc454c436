#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class Colour : std::uint8_t { Red, Blue };
enum class EdgeColour : std::uint8_t { Red, Blue, Unset };

inline Colour other(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }
inline EdgeColour to_edge_colour(Colour c) {
  return c == Colour::Red ? EdgeColour::Red : EdgeColour::Blue;
}
const char* colour_name(Colour c);

// Total or partial assignment of {Red, Blue, Unset} to the edges of a graph.
class Colouring {
public:
  Colouring() = default;
  explicit Colouring(Graph g, EdgeColour fill = EdgeColour::Unset);

  const Graph& graph() const { return g_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Edge ids follow the fixed lexicographic edge order of Graph::edges().
  int edge_id(int u, int v) const;  // -1 when uv is not an edge
  EdgeColour at(int id) const { return colour_[static_cast<std::size_t>(id)]; }
  EdgeColour at(int u, int v) const;
  void set(int id, EdgeColour c) { colour_[static_cast<std::size_t>(id)] = c; }
  void set(int u, int v, EdgeColour c);

  bool total() const;
  Colouring swapped() const;  // red <-> blue

  bool operator==(const Colouring&) const = default;

private:
  Graph g_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<EdgeColour> colour_;
  std::vector<int> id_;  // n*n lookup table, -1 for non-edges
};

// Spanning subgraph holding exactly the edges of one colour. The colouring
// must be total.
Graph colour_class(const Colouring& c, Colour colour);

// Text format: one edge per line, "u v R" or "u v B"; '#' starts a comment.
// Lines may cover a subset of the edges; uncovered edges stay Unset.
Colouring parse_colouring(const Graph& g, std::string_view text);
std::string write_colouring(const Colouring& c);
std::vector<std::string> colouring_lines(const Colouring& c);

}  // namespace ramsey
