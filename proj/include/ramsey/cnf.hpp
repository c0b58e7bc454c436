#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"
#include "ramsey/placements.hpp"

namespace ramsey {

// CNF over one boolean per edge (variable i+1 <-> edge i red, edges in the
// fixed lexicographic order). Satisfiable iff the graph does not arrow the
// pattern; a model decodes to an avoiding colouring.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<std::pair<int, int>> edges;  // decoding map, index = var - 1
};

CnfFormula to_cnf(const Graph& g, const Pattern& p);

// DIMACS text: "c edge <var> = (u,v)" comments, "p cnf <vars> <clauses>",
// then 0-terminated clauses.
std::string write_dimacs(const CnfFormula& f);

// Internal cross-check: first satisfying assignment by exhaustive enumeration
// over edge variables (lexicographic colouring order), or nullopt when
// unsatisfiable. Capped at 24 variables.
std::optional<std::vector<bool>> cnf_first_model(const CnfFormula& f);

Colouring decode_model(const Graph& g, const std::vector<bool>& model);

}  // namespace ramsey
