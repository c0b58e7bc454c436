#include "ramsey/cnf.hpp"

namespace ramsey {

CnfFormula to_cnf(const Graph& g, const Pattern& p) {
  CnfFormula f;
  f.edges = g.edges();
  f.num_vars = static_cast<int>(f.edges.size());
  for (const Placement& pl : pattern_placements(g, p)) {
    std::vector<int> not_all_red, not_all_blue;
    for (int e : pl.edge_ids) {
      not_all_red.push_back(-(e + 1));
      not_all_blue.push_back(e + 1);
    }
    f.clauses.push_back(std::move(not_all_red));
    f.clauses.push_back(std::move(not_all_blue));
  }
  return f;
}

std::string write_dimacs(const CnfFormula& f) {
  std::string out;
  for (std::size_t i = 0; i < f.edges.size(); ++i) {
    out += "c edge " + std::to_string(i + 1) + " = (" + std::to_string(f.edges[i].first) + "," +
           std::to_string(f.edges[i].second) + ")\n";
  }
  out += "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

std::optional<std::vector<bool>> cnf_first_model(const CnfFormula& f) {
  if (f.num_vars > 24) throw unsupported_size_error("model enumeration capped at 24 variables");
  int m = f.num_vars;
  const std::uint32_t total = std::uint32_t{1} << m;
  // same order as the colouring enumeration: variable 1 (edge 0) most
  // significant, true (red) before false (blue)
  for (std::uint32_t r = 0; r < total; ++r) {
    auto value = [&](int var) { return ((r >> (m - var)) & 1u) == 0; };
    bool ok = true;
    for (const auto& clause : f.clauses) {
      bool sat = false;
      for (int lit : clause) {
        int var = lit > 0 ? lit : -lit;
        if ((lit > 0) == value(var)) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<bool> model(static_cast<std::size_t>(m));
      for (int v = 1; v <= m; ++v) model[static_cast<std::size_t>(v - 1)] = value(v);
      return model;
    }
  }
  return std::nullopt;
}

Colouring decode_model(const Graph& g, const std::vector<bool>& model) {
  Colouring c(g);
  if (model.size() != static_cast<std::size_t>(c.edge_count()))
    throw error("model size does not match edge count");
  for (int e = 0; e < c.edge_count(); ++e)
    c.set(e, model[static_cast<std::size_t>(e)] ? EdgeColour::Red : EdgeColour::Blue);
  return c;
}

}  // namespace ramsey
