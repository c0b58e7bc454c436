#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/arrow.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

// One representative per isomorphism class of simple graphs on n vertices,
// 1 <= n <= 7, ordered by canonical graph6 string.
const std::vector<Graph>& enumerate_graphs_small(int n);

struct ScanRecord {
  std::string graph6;  // canonical when the graph has at most 10 vertices
  int omega = 0;
  bool arrows_target = false;
  std::optional<bool> arrows_cotarget;
  bool contains_k6 = false;
  std::optional<bool> minimal_for_target;
  std::string note;
  std::optional<std::string> input_error;  // set for unreadable corpus lines
  int line = 0;

  // arrows target, misses the cotarget, yet holds no K6
  bool violation() const {
    return !input_error && arrows_target && arrows_cotarget && !*arrows_cotarget && !contains_k6;
  }
};

struct ScanOptions {
  int threads = 1;
  bool minimality = true;  // compute minimal_for_target for arrowing graphs
};

ScanRecord scan_graph(const Graph& g, const Pattern& target, const Pattern& cotarget,
                      const ScanOptions& opts = {});

struct ScanSummary {
  long long total = 0;
  long long errors = 0;
  long long arrows_target = 0;
  std::vector<std::string> violations;  // graph6 of violating records
};

// Streaming scan over graph6 lines; emits records in input order.
ScanSummary scan_stream(std::istream& in, const Pattern& target, const Pattern& cotarget,
                        const ScanOptions& opts,
                        const std::function<void(const ScanRecord&)>& emit);

struct DivergenceResult {
  std::vector<std::string> members;  // canonical graph6, sorted, deduplicated
  long long scanned = 0;
};

// Graphs minimal for one pattern and not arrowing the other, restricted to
// the given corpus.
DivergenceResult divergence_set(const std::vector<Graph>& corpus, const Pattern& p1,
                                const Pattern& p2, const ScanOptions& opts = {});

}  // namespace ramsey
