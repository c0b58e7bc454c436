#include <random>

#include "doctest.h"
#include "ramsey/arrow.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/placements.hpp"

using namespace ramsey;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Colouring pentagon_pentagram() {
  Colouring c(Graph::complete(5));
  for (int v = 0; v < 5; ++v) {
    c.set(v, (v + 1) % 5, EdgeColour::Red);
    c.set(v, (v + 2) % 5, EdgeColour::Blue);
  }
  return c;
}

bool same_witness(const ArrowResult& a, const ArrowResult& b) {
  if (a.verdict != b.verdict) return false;
  if (a.witness.has_value() != b.witness.has_value()) return false;
  if (!a.witness) return true;
  return *a.witness == *b.witness;
}

}  // namespace

TEST_SUITE("arrow") {
  TEST_CASE("oracle ground facts") {
    ArrowResult k6 = enumerate_colourings_oracle(Graph::complete(6), Pattern{3});
    CHECK(k6.verdict == Verdict::Arrows);

    ArrowResult k5 = enumerate_colourings_oracle(Graph::complete(5), Pattern{3});
    REQUIRE(k5.verdict == Verdict::NotArrows);
    REQUIRE(k5.witness.has_value());
    // any avoiding colouring of K5 splits into two 5-cycles
    CHECK(max_clique_size(colour_class(*k5.witness, Colour::Red)) == 2);
    CHECK(max_clique_size(colour_class(*k5.witness, Colour::Blue)) == 2);

    CHECK(enumerate_colourings_oracle(Graph::complete(4), Pattern{3}).verdict ==
          Verdict::NotArrows);
    CHECK_THROWS_AS(enumerate_colourings_oracle(Graph::complete(8), Pattern{3}),
                    unsupported_size_error);
  }

  TEST_CASE("find_mono examples") {
    Colouring all_red(Graph::complete(6), EdgeColour::Red);
    auto hit = find_mono(all_red, Pattern{3, 2});
    REQUIRE(hit.has_value());
    CHECK(hit->first == Colour::Red);
    CHECK(set_size(hit->second[0]) == 3);
    CHECK(set_size(hit->second[1]) == 2);
    CHECK((hit->second[0] & hit->second[1]) == 0);

    CHECK_FALSE(find_mono(pentagon_pentagram(), Pattern{3}).has_value());

    // red K4 on {0..3}, everything else blue: no mono K3+K2 in either colour
    Colouring c(Graph::complete(6), EdgeColour::Blue);
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) c.set(u, v, EdgeColour::Red);
    CHECK_FALSE(find_mono(c, Pattern{3, 2}).has_value());
    CHECK(find_mono(c, Pattern{3}, Colour::Red).has_value());

    Colouring partial(Graph::complete(3));
    CHECK_THROWS_AS(find_mono(partial, Pattern{2}), error);
  }

  TEST_CASE("arrows ground facts with validated witnesses") {
    CHECK(arrows(Graph::complete(6), Pattern{3}).verdict == Verdict::Arrows);

    ArrowResult sep = arrows(Graph::complete(6), Pattern{3, 2});
    REQUIRE(sep.verdict == Verdict::NotArrows);
    REQUIRE(sep.witness.has_value());
    CHECK(sep.witness->total());
    CHECK_FALSE(find_mono(*sep.witness, Pattern{3, 2}).has_value());

    ArrowResult k5 = arrows(Graph::complete(5), Pattern{3});
    REQUIRE(k5.verdict == Verdict::NotArrows);
    CHECK(max_clique_size(colour_class(*k5.witness, Colour::Red)) == 2);
    CHECK(max_clique_size(colour_class(*k5.witness, Colour::Blue)) == 2);
  }

  TEST_CASE("degenerate inputs") {
    // pattern larger than the graph: immediately avoidable, all-red witness
    ArrowResult r = arrows(Graph::complete(3), Pattern{4});
    REQUIRE(r.verdict == Verdict::NotArrows);
    for (int e = 0; e < r.witness->edge_count(); ++e)
      CHECK(r.witness->at(e) == EdgeColour::Red);

    ArrowResult edgeless = arrows(Graph(4), Pattern{2});
    CHECK(edgeless.verdict == Verdict::NotArrows);
    CHECK(edgeless.witness->edge_count() == 0);

    // triangle-free graph never holds a triangle
    CHECK(arrows(Graph::cycle(5), Pattern{3}).verdict == Verdict::NotArrows);
  }

  TEST_CASE("arrows_pair") {
    CHECK(arrows_pair(Graph::complete(6), Pattern{3}, Pattern{3}).verdict == Verdict::Arrows);
    CHECK(arrows_pair(Graph::complete(5), Pattern{2}, Pattern{5}).verdict == Verdict::Arrows);
    CHECK(arrows_pair(Graph::complete(3), Pattern{3}, Pattern{2}).verdict == Verdict::Arrows);
    // asymmetric non-arrowing: all-red avoids blue K2 and red K4 is absent in K3
    CHECK(arrows_pair(Graph::complete(3), Pattern{4}, Pattern{2}).verdict == Verdict::NotArrows);
  }

  TEST_CASE("arrows_pair agrees with direct enumeration on small graphs") {
    auto brute = [](const Graph& g, const Pattern& red, const Pattern& blue) {
      int m = g.edge_count();
      for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << m); ++bits) {
        Colouring c(g);
        for (int e = 0; e < m; ++e)
          c.set(e, ((bits >> e) & 1u) ? EdgeColour::Blue : EdgeColour::Red);
        bool red_hit = find_clique_union(colour_class(c, Colour::Red), red).has_value();
        bool blue_hit = find_clique_union(colour_class(c, Colour::Blue), blue).has_value();
        if (!red_hit && !blue_hit) return Verdict::NotArrows;
      }
      return Verdict::Arrows;
    };
    std::mt19937 rng(53);
    std::vector<std::pair<Pattern, Pattern>> pairs{
        {Pattern{3}, Pattern{2, 2}}, {Pattern{2}, Pattern{3}}, {Pattern{4}, Pattern{3}}};
    int checked = 0;
    for (int iter = 0; iter < 60 && checked < 30; ++iter) {
      std::uniform_int_distribution<int> pick_n(3, 6);
      Graph g = random_graph(rng, pick_n(rng));
      if (g.edge_count() > 12) continue;
      ++checked;
      for (const auto& [red, blue] : pairs) {
        CAPTURE(write_graph6(g));
        CHECK(arrows_pair(g, red, blue).verdict == brute(g, red, blue));
      }
    }
    CHECK(checked >= 20);
  }

  TEST_CASE("oracle equivalence on all graphs up to 5 vertices plus random 6-vertex") {
    std::vector<Graph> corpus;
    for (int n = 2; n <= 5; ++n)
      for (const Graph& g : enumerate_graphs_small(n)) corpus.push_back(g);
    std::mt19937 rng(41);
    for (int iter = 0; iter < 12; ++iter) corpus.push_back(random_graph(rng, 6));

    for (const Pattern& p : {Pattern{3}, Pattern{3, 2}, Pattern{2, 2}}) {
      for (const Graph& g : corpus) {
        ArrowResult fast = arrows(g, p);
        ArrowResult slow = enumerate_colourings_oracle(g, p);
        CAPTURE(write_graph6(g));
        CAPTURE(p.format());
        CHECK(fast.verdict == slow.verdict);
        CHECK(same_witness(fast, slow));
      }
    }
  }

  TEST_CASE("edge monotonicity") {
    // K6 embedded in 8 vertices keeps arrowing K3 under edge additions
    std::mt19937 rng(43);
    Graph base(8);
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v) base.add_edge(u, v);
    REQUIRE(arrows(base, Pattern{3}).verdict == Verdict::Arrows);
    for (int iter = 0; iter < 10; ++iter) {
      Graph g = base;
      std::uniform_int_distribution<int> pick(0, 7);
      for (int add = 0; add < 6; ++add) {
        int u = pick(rng), v = pick(rng);
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
      }
      CHECK(arrows(g, Pattern{3}).verdict == Verdict::Arrows);
    }
  }

  TEST_CASE("pattern monotonicity on the 6-vertex corpus") {
    // arrowing the union forces arrowing the big clique alone
    ArrowOptions quiet;
    quiet.want_witness = false;
    for (const Graph& g : enumerate_graphs_small(6)) {
      if (arrows(g, Pattern{3, 2}, quiet).verdict == Verdict::Arrows)
        CHECK(arrows(g, Pattern{3}, quiet).verdict == Verdict::Arrows);
    }
  }

  TEST_CASE("colour swap of a witness still avoids") {
    ArrowResult r = arrows(Graph::complete(6), Pattern{3, 2});
    REQUIRE(r.witness.has_value());
    Colouring swapped = r.witness->swapped();
    CHECK_FALSE(find_mono(swapped, Pattern{3, 2}).has_value());
  }

  TEST_CASE("verdict and witness are independent of branching heuristic and threads") {
    std::mt19937 rng(47);
    std::vector<Graph> corpus{Graph::complete(5), Graph::complete(6), Graph::k8_minus_c5()};
    for (int iter = 0; iter < 8; ++iter) corpus.push_back(random_graph(rng, 7));

    for (const Graph& g : corpus) {
      for (const Pattern& p : {Pattern{3}, Pattern{3, 2}}) {
        ArrowResult base = arrows(g, p);
        ArrowOptions lowest;
        lowest.branch = ArrowOptions::Branch::LowestIndex;
        ArrowResult alt = arrows(g, p, lowest);
        CHECK(base.verdict == alt.verdict);
        CHECK(same_witness(base, alt));
        ArrowOptions threaded;
        threaded.threads = 2;
        ArrowResult par = arrows(g, p, threaded);
        CHECK(base.verdict == par.verdict);
        CHECK(same_witness(base, par));
      }
    }
  }

  TEST_CASE("full enumeration confirms the two headline Arrows instances") {
    // 2^23 colourings of the clique-number-5 graph on 8 vertices
    Graph graham = Graph::k8_minus_c5();
    CHECK(enumerate_colourings_oracle(graham, Pattern{3}).verdict == Verdict::Arrows);
    // 2^21 colourings of K7
    CHECK(enumerate_colourings_oracle(Graph::complete(7), Pattern{3, 2}).verdict ==
          Verdict::Arrows);
    CHECK(arrows(graham, Pattern{3}).verdict == Verdict::Arrows);
    CHECK(arrows(Graph::complete(7), Pattern{3, 2}).verdict == Verdict::Arrows);
  }

  TEST_CASE("sequential stats are reproducible") {
    ArrowResult a = arrows(Graph::k8_minus_c5(), Pattern{3});
    ArrowResult b = arrows(Graph::k8_minus_c5(), Pattern{3});
    CHECK(a.stats.nodes == b.stats.nodes);
    CHECK(a.verdict == Verdict::Arrows);
  }

  TEST_CASE("on-the-fly fallback matches the precomputed path") {
    ArrowOptions fallback;
    fallback.placement_limit = 0;  // force the no-placement-list path
    for (const Graph& g : {Graph::complete(5), Graph::complete(6), Graph::cycle(5)}) {
      for (const Pattern& p : {Pattern{3}, Pattern{3, 2}}) {
        ArrowResult a = arrows(g, p);
        ArrowResult b = arrows(g, p, fallback);
        CHECK(a.verdict == b.verdict);
        CHECK(same_witness(a, b));
      }
    }
  }

  TEST_CASE("ramsey minimality") {
    MinimalityReport k6 = is_ramsey_minimal(Graph::complete(6), Pattern{3});
    CHECK(k6.is_ramsey);
    CHECK(k6.is_minimal);
    CHECK(k6.critical_edges.size() == 15);

    MinimalityReport k7 = is_ramsey_minimal(Graph::complete(7), Pattern{3});
    CHECK(k7.is_ramsey);
    CHECK_FALSE(k7.is_minimal);
    CHECK(k7.critical_edges.empty());

    MinimalityReport k5 = is_ramsey_minimal(Graph::complete(5), Pattern{3});
    CHECK_FALSE(k5.is_ramsey);
    CHECK_FALSE(k5.is_minimal);

    // isolated vertices disqualify minimality
    Graph k6_plus(7);
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v) k6_plus.add_edge(u, v);
    CHECK_FALSE(is_ramsey_minimal(k6_plus, Pattern{3}).is_minimal);
  }
}
