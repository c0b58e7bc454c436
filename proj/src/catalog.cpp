#include "ramsey/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace ramsey {

namespace {

std::vector<Graph> build_level(const std::vector<Graph>& prev, int n) {
  // every n-vertex graph arises from some (n-1)-vertex graph by attaching a
  // new vertex; canonical dedup collapses isomorphs
  std::set<std::string> seen;
  for (const Graph& parent : prev) {
    std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    for (std::uint64_t nb = 0; nb < subsets; ++nb) {
      Graph g(n);
      for (int u = 0; u < n - 1; ++u) {
        for (int v = u + 1; v < n - 1; ++v)
          if (parent.has_edge(u, v)) g.add_edge(u, v);
        if ((nb >> u) & 1u) g.add_edge(u, n - 1);
      }
      seen.insert(write_graph6(canonical_form(g)));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const std::string& s : seen) out.push_back(parse_graph6(s));
  return out;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs_small(int n) {
  if (n < 1 || n > 7)
    throw unsupported_size_error("internal enumeration covers 1..7 vertices; larger corpora "
                                 "must be ingested from files");
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::scoped_lock lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (cache.find(1) == cache.end()) cache[1] = {Graph(1)};
  for (int k = 2; k <= n; ++k)
    if (cache.find(k) == cache.end()) cache[k] = build_level(cache[k - 1], k);
  return cache[n];
}

ScanRecord scan_graph(const Graph& g, const Pattern& target, const Pattern& cotarget,
                      const ScanOptions& opts) {
  ScanRecord rec;
  if (g.vertex_count() <= 10) {
    rec.graph6 = write_graph6(canonical_form(g));
  } else {
    rec.graph6 = write_graph6(g);
    rec.note = "not canonicalised (more than 10 vertices)";
  }
  bool isolated = false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) isolated = true;
  if (isolated) {
    if (!rec.note.empty()) rec.note += "; ";
    rec.note += "has isolated vertices";
  }

  rec.omega = max_clique_size(g);
  rec.contains_k6 = rec.omega >= 6;
  ArrowOptions ao;
  ao.want_witness = false;
  rec.arrows_target = arrows(g, target, ao).verdict == Verdict::Arrows;
  if (rec.arrows_target) {
    rec.arrows_cotarget = arrows(g, cotarget, ao).verdict == Verdict::Arrows;
    if (opts.minimality) rec.minimal_for_target = is_ramsey_minimal(g, target, ao).is_minimal;
  }
  return rec;
}

ScanSummary scan_stream(std::istream& in, const Pattern& target, const Pattern& cotarget,
                        const ScanOptions& opts,
                        const std::function<void(const ScanRecord&)>& emit) {
  struct Item {
    int line;
    std::string text;
  };
  std::vector<Item> items;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    items.push_back({lineno, line});
  }

  std::vector<ScanRecord> records(items.size());
  auto work = [&](std::size_t i) {
    try {
      Graph g = parse_graph6(items[i].text);
      records[i] = scan_graph(g, target, cotarget, opts);
    } catch (const std::exception& e) {
      records[i] = ScanRecord{};
      records[i].input_error = e.what();
      records[i].graph6 = items[i].text;
    }
    records[i].line = items[i].line;
  };

  if (opts.threads > 1) {
    std::atomic<std::size_t> next{0};
    auto runner = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= items.size()) break;
        work(i);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < opts.threads; ++t) pool.emplace_back(runner);
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) work(i);
  }

  ScanSummary summary;
  for (const ScanRecord& rec : records) {
    emit(rec);
    ++summary.total;
    if (rec.input_error) ++summary.errors;
    if (rec.arrows_target) ++summary.arrows_target;
    if (rec.violation()) summary.violations.push_back(rec.graph6);
  }
  return summary;
}

DivergenceResult divergence_set(const std::vector<Graph>& corpus, const Pattern& p1,
                                const Pattern& p2, const ScanOptions& opts) {
  DivergenceResult out;
  out.scanned = static_cast<long long>(corpus.size());
  std::vector<std::uint8_t> in_set(corpus.size(), 0);

  auto work = [&](std::size_t i) {
    const Graph& g = corpus[i];
    ArrowOptions ao;
    ao.want_witness = false;
    bool a1 = arrows(g, p1, ao).verdict == Verdict::Arrows;
    bool a2 = arrows(g, p2, ao).verdict == Verdict::Arrows;
    if (a1 && !a2 && is_ramsey_minimal(g, p1, ao).is_minimal) in_set[i] = 1;
    if (a2 && !a1 && is_ramsey_minimal(g, p2, ao).is_minimal) in_set[i] = 1;
  };

  if (opts.threads > 1) {
    std::atomic<std::size_t> next{0};
    auto runner = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= corpus.size()) break;
        work(i);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < opts.threads; ++t) pool.emplace_back(runner);
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t i = 0; i < corpus.size(); ++i) work(i);
  }

  std::set<std::string> members;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (in_set[i]) {
      const Graph& g = corpus[i];
      members.insert(g.vertex_count() <= 10 ? write_graph6(canonical_form(g)) : write_graph6(g));
    }
  out.members.assign(members.begin(), members.end());
  return out;
}

}  // namespace ramsey
