#include <random>
#include <sstream>

#include "doctest.h"
#include "ramsey/arrow.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/cnf.hpp"

using namespace ramsey;

TEST_SUITE("cnf") {
  TEST_CASE("placement counts") {
    CHECK(pattern_placements(Graph::complete(4), Pattern{3}).size() == 4);
    CHECK(pattern_placements(Graph::complete(5), Pattern{3, 2}).size() == 10);
    CHECK(pattern_placements(Graph::cycle(5), Pattern{3}).empty());
    // unordered equal-size parts: disjoint edge pairs of K4
    CHECK(pattern_placements(Graph::complete(4), Pattern{2, 2}).size() == 3);
    Graph triangles(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
      triangles.add_edge(u, v);
    CHECK(pattern_placements(triangles, Pattern{3, 3}).size() == 1);
  }

  TEST_CASE("formula shapes") {
    CnfFormula k4 = to_cnf(Graph::complete(4), Pattern{3});
    CHECK(k4.num_vars == 6);
    CHECK(k4.clauses.size() == 8);
    CHECK(cnf_first_model(k4).has_value());

    CnfFormula k6 = to_cnf(Graph::complete(6), Pattern{3});
    CHECK(k6.num_vars == 15);
    CHECK(k6.clauses.size() == 40);
    CHECK_FALSE(cnf_first_model(k6).has_value());

    CnfFormula c5 = to_cnf(Graph::cycle(5), Pattern{3});
    CHECK(c5.clauses.empty());
    CHECK(cnf_first_model(c5).has_value());
  }

  TEST_CASE("dimacs text") {
    CnfFormula empty;
    empty.num_vars = 6;
    empty.edges = Graph::complete(4).edges();
    std::string text = write_dimacs(empty);
    CHECK(text.find("p cnf 6 0\n") != std::string::npos);
    CHECK(text.find("c edge 1 = (0,1)\n") != std::string::npos);

    std::string k4 = write_dimacs(to_cnf(Graph::complete(4), Pattern{3}));
    CHECK(k4.find("p cnf 6 8\n") != std::string::npos);
    // first placement {0,1,2}: edges 1,2,4 -> one all-negative, one all-positive clause
    CHECK(k4.find("-1 -2 -4 0\n") != std::string::npos);
    CHECK(k4.find("1 2 4 0\n") != std::string::npos);
  }

  TEST_CASE("models decode to avoiding colourings") {
    CnfFormula f = to_cnf(Graph::complete(6), Pattern{3, 2});
    auto model = cnf_first_model(f);
    REQUIRE(model.has_value());
    Colouring witness = decode_model(Graph::complete(6), *model);
    CHECK_FALSE(find_mono(witness, Pattern{3, 2}).has_value());
    // the first model in colouring order is the engine's lexicographic witness
    ArrowResult r = arrows(Graph::complete(6), Pattern{3, 2});
    CHECK(witness == *r.witness);
  }

  TEST_CASE("satisfiability matches the arrowing verdict on the small corpus") {
    ArrowOptions quiet;
    quiet.want_witness = false;
    for (int n = 2; n <= 5; ++n) {
      for (const Graph& g : enumerate_graphs_small(n)) {
        for (const Pattern& p : {Pattern{3}, Pattern{3, 2}, Pattern{2, 2}}) {
          CnfFormula f = to_cnf(g, p);
          CHECK(f.clauses.size() == 2 * pattern_placements(g, p).size());
          bool sat = cnf_first_model(f).has_value();
          bool not_arrows = arrows(g, p, quiet).verdict == Verdict::NotArrows;
          CAPTURE(write_graph6(g));
          CHECK(sat == not_arrows);
        }
      }
    }
  }

  TEST_CASE("satisfiability matches the verdict on sparse random 8-vertex graphs") {
    std::mt19937 rng(59);
    std::bernoulli_distribution coin(0.35);
    ArrowOptions quiet;
    quiet.want_witness = false;
    int checked = 0;
    for (int iter = 0; iter < 60 && checked < 20; ++iter) {
      Graph g(8);
      for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
          if (coin(rng)) g.add_edge(u, v);
      if (g.edge_count() > 16) continue;
      ++checked;
      for (const Pattern& p : {Pattern{3}, Pattern{3, 2}}) {
        CnfFormula f = to_cnf(g, p);
        bool sat = cnf_first_model(f).has_value();
        bool not_arrows = arrows(g, p, quiet).verdict == Verdict::NotArrows;
        CAPTURE(write_graph6(g));
        CHECK(sat == not_arrows);
      }
    }
    CHECK(checked >= 10);
  }
}
