#include <numeric>
#include <set>
#include <sstream>

#include "doctest.h"
#include "ramsey/catalog.hpp"

using namespace ramsey;

namespace {

// Independent count of isomorphism classes: average over all vertex
// permutations of 2^(orbits of the induced pair permutation).
long long burnside_graph_count(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long long sum = 0, perms = 0;
  do {
    ++perms;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    auto index_of = [&](int u, int v) {
      if (u > v) std::swap(u, v);
      return std::find(pairs.begin(), pairs.end(), std::make_pair(u, v)) - pairs.begin();
    };
    std::vector<bool> seen(pairs.size(), false);
    int orbits = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (seen[i]) continue;
      ++orbits;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        auto [u, v] = pairs[j];
        j = static_cast<std::size_t>(index_of(perm[static_cast<std::size_t>(u)],
                                              perm[static_cast<std::size_t>(v)]));
      }
    }
    sum += 1LL << orbits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / perms;
}

// Direct labelled enumeration with isomorphism rejection, small n only.
long long labelled_class_count(int n) {
  int m = n * (n - 1) / 2;
  std::set<std::string> classes;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << m); ++bits) {
    Graph g(n);
    int e = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++e)
        if ((bits >> e) & 1u) g.add_edge(u, v);
    classes.insert(write_graph6(canonical_form(g)));
  }
  return static_cast<long long>(classes.size());
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("enumeration counts match both independent oracles") {
    const long long expected[] = {0, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) {
      CAPTURE(n);
      CHECK(static_cast<long long>(enumerate_graphs_small(n).size()) == expected[n]);
      CHECK(burnside_graph_count(n) == expected[n]);
      if (n <= 5) CHECK(labelled_class_count(n) == expected[n]);
    }
    CHECK_THROWS_AS(enumerate_graphs_small(8), unsupported_size_error);
    CHECK_THROWS_AS(enumerate_graphs_small(0), unsupported_size_error);
  }

  TEST_CASE("enumeration is deterministic and canonical") {
    const auto& a = enumerate_graphs_small(5);
    const auto& b = enumerate_graphs_small(5);
    REQUIRE(a.size() == b.size());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i] == b[i]);
      CHECK(canonical_form(a[i]) == a[i]);
      names.push_back(write_graph6(a[i]));
    }
    CHECK(std::is_sorted(names.begin(), names.end()));
  }

  TEST_CASE("scan records for the three reference graphs") {
    Pattern target{3}, cotarget{3, 2};

    ScanRecord k6 = scan_graph(Graph::complete(6), target, cotarget);
    CHECK(k6.omega == 6);
    CHECK(k6.arrows_target);
    REQUIRE(k6.arrows_cotarget.has_value());
    CHECK_FALSE(*k6.arrows_cotarget);
    CHECK(k6.contains_k6);
    CHECK_FALSE(k6.violation());
    REQUIRE(k6.minimal_for_target.has_value());
    CHECK(*k6.minimal_for_target);

    ScanRecord graham = scan_graph(Graph::k8_minus_c5(), target, cotarget);
    CHECK(graham.omega == 5);
    CHECK(graham.arrows_target);
    REQUIRE(graham.arrows_cotarget.has_value());
    CHECK(*graham.arrows_cotarget);
    CHECK_FALSE(graham.contains_k6);
    CHECK_FALSE(graham.violation());

    ScanRecord c5 = scan_graph(Graph::cycle(5), target, cotarget);
    CHECK_FALSE(c5.arrows_target);
    CHECK_FALSE(c5.arrows_cotarget.has_value());
    CHECK_FALSE(c5.minimal_for_target.has_value());
  }

  TEST_CASE("violation flag is exactly the three-way conjunction") {
    ScanRecord r;
    r.arrows_target = true;
    r.arrows_cotarget = false;
    r.contains_k6 = false;
    CHECK(r.violation());
    r.contains_k6 = true;
    CHECK_FALSE(r.violation());
    r.contains_k6 = false;
    r.arrows_cotarget = true;
    CHECK_FALSE(r.violation());
    r.arrows_cotarget = false;
    r.input_error = "bad line";
    CHECK_FALSE(r.violation());
  }

  TEST_CASE("stream scan keeps input order, reports bad lines, survives threads") {
    std::string corpus = "E~~w\nD~{\nnot-a-graph\nDhc\n";
    for (int threads : {1, 2}) {
      std::istringstream in(corpus);
      ScanOptions opts;
      opts.threads = threads;
      opts.minimality = false;
      std::vector<ScanRecord> records;
      ScanSummary summary =
          scan_stream(in, Pattern{3}, Pattern{3, 2}, opts,
                      [&](const ScanRecord& r) { records.push_back(r); });
      REQUIRE(records.size() == 4);
      CHECK(summary.total == 4);
      CHECK(summary.errors == 1);
      CHECK(summary.violations.empty());
      CHECK(records[0].graph6 == "E~~w");
      CHECK(records[0].arrows_target);
      CHECK(records[1].graph6 == "D~{");
      CHECK_FALSE(records[1].arrows_target);
      CHECK(records[2].input_error.has_value());
      CHECK(records[2].line == 3);
    }
  }

  TEST_CASE("scan records are identical across thread counts on the 5-vertex corpus") {
    std::ostringstream corpus;
    for (int n = 1; n <= 5; ++n)
      for (const Graph& g : enumerate_graphs_small(n)) corpus << write_graph6(g) << "\n";

    auto run = [&](int threads) {
      std::istringstream in(corpus.str());
      ScanOptions opts;
      opts.threads = threads;
      std::vector<ScanRecord> records;
      scan_stream(in, Pattern{3}, Pattern{2, 2}, opts,
                  [&](const ScanRecord& r) { records.push_back(r); });
      return records;
    };
    auto seq = run(1);
    auto par = run(2);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
      CHECK(seq[i].graph6 == par[i].graph6);
      CHECK(seq[i].omega == par[i].omega);
      CHECK(seq[i].arrows_target == par[i].arrows_target);
      CHECK(seq[i].arrows_cotarget == par[i].arrows_cotarget);
      CHECK(seq[i].minimal_for_target == par[i].minimal_for_target);
      CHECK(seq[i].contains_k6 == par[i].contains_k6);
    }
  }

  TEST_CASE("divergence on handmade corpora") {
    Pattern p1{3}, p2{3, 2};

    DivergenceResult tiny = divergence_set({Graph::complete(6), Graph::complete(7)}, p1, p2);
    REQUIRE(tiny.members.size() == 1);
    CHECK(tiny.members[0] == write_graph6(canonical_form(Graph::complete(6))));

    std::vector<Graph> upto5;
    for (int n = 1; n <= 5; ++n)
      for (const Graph& g : enumerate_graphs_small(n)) upto5.push_back(g);
    CHECK(divergence_set(upto5, p1, p2).members.empty());
  }

  TEST_CASE("divergence over all graphs on at most 6 vertices finds exactly K6") {
    std::vector<Graph> corpus;
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : enumerate_graphs_small(n)) corpus.push_back(g);
    ScanOptions opts;
    opts.threads = 2;
    DivergenceResult res = divergence_set(corpus, Pattern{3}, Pattern{3, 2}, opts);
    REQUIRE(res.members.size() == 1);
    CHECK(res.members[0] == write_graph6(canonical_form(Graph::complete(6))));

    // members re-checked individually: minimal for one pattern, not arrowing the other
    Graph member = parse_graph6(res.members[0]);
    CHECK(is_ramsey_minimal(member, Pattern{3}).is_minimal);
    CHECK(arrows(member, Pattern{3, 2}).verdict == Verdict::NotArrows);
  }
}
