#include "ramsey/colouring.hpp"

#include <sstream>

namespace ramsey {

const char* colour_name(Colour c) { return c == Colour::Red ? "Red" : "Blue"; }

Colouring::Colouring(Graph g, EdgeColour fill) : g_(std::move(g)) {
  edges_ = g_.edges();
  colour_.assign(edges_.size(), fill);
  int n = g_.vertex_count();
  id_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    id_[static_cast<std::size_t>(u * n + v)] = static_cast<int>(e);
    id_[static_cast<std::size_t>(v * n + u)] = static_cast<int>(e);
  }
}

int Colouring::edge_id(int u, int v) const {
  int n = g_.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) return -1;
  return id_[static_cast<std::size_t>(u * n + v)];
}

EdgeColour Colouring::at(int u, int v) const {
  int id = edge_id(u, v);
  if (id < 0) throw error("not an edge of the graph");
  return colour_[static_cast<std::size_t>(id)];
}

void Colouring::set(int u, int v, EdgeColour c) {
  int id = edge_id(u, v);
  if (id < 0) throw error("not an edge of the graph");
  colour_[static_cast<std::size_t>(id)] = c;
}

bool Colouring::total() const {
  for (EdgeColour c : colour_)
    if (c == EdgeColour::Unset) return false;
  return true;
}

Colouring Colouring::swapped() const {
  Colouring out = *this;
  for (auto& c : out.colour_) {
    if (c == EdgeColour::Red)
      c = EdgeColour::Blue;
    else if (c == EdgeColour::Blue)
      c = EdgeColour::Red;
  }
  return out;
}

Graph colour_class(const Colouring& c, Colour colour) {
  if (!c.total()) throw error("colour_class requires a total colouring");
  Graph out(c.graph().vertex_count());
  EdgeColour want = to_edge_colour(colour);
  for (int e = 0; e < c.edge_count(); ++e) {
    if (c.at(e) == want) {
      auto [u, v] = c.edges()[static_cast<std::size_t>(e)];
      out.add_edge(u, v);
    }
  }
  return out;
}

Colouring parse_colouring(const Graph& g, std::string_view text) {
  Colouring out(g);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::vector<bool> seen(static_cast<std::size_t>(out.edge_count()), false);
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int u, v;
    std::string col;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v >> col)) throw parse_error("malformed colouring line", lineno);
    int id = out.edge_id(u, v);
    if (id < 0) throw parse_error("colouring names a non-edge", lineno);
    if (seen[static_cast<std::size_t>(id)]) throw parse_error("duplicate edge in colouring", lineno);
    seen[static_cast<std::size_t>(id)] = true;
    if (col == "R")
      out.set(id, EdgeColour::Red);
    else if (col == "B")
      out.set(id, EdgeColour::Blue);
    else
      throw parse_error("edge colour must be R or B", lineno);
    std::string extra;
    if (ls >> extra) throw parse_error("trailing tokens on colouring line", lineno);
  }
  return out;
}

std::vector<std::string> colouring_lines(const Colouring& c) {
  std::vector<std::string> out;
  for (int e = 0; e < c.edge_count(); ++e) {
    if (c.at(e) == EdgeColour::Unset) continue;
    auto [u, v] = c.edges()[static_cast<std::size_t>(e)];
    out.push_back(std::to_string(u) + " " + std::to_string(v) + " " +
                  (c.at(e) == EdgeColour::Red ? "R" : "B"));
  }
  return out;
}

std::string write_colouring(const Colouring& c) {
  std::string out;
  for (const std::string& line : colouring_lines(c)) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace ramsey
