#include "ramsey/arrow.hpp"

#include <atomic>
#include <chrono>
#include <deque>
#include <thread>

#include "ramsey/kernels.hpp"
#include "ramsey/placements.hpp"

namespace ramsey {

std::optional<std::pair<Colour, std::vector<VertexSet>>> find_mono(const Colouring& c,
                                                                   const Pattern& p,
                                                                   std::optional<Colour> colour) {
  if (!c.total()) throw error("find_mono requires a total colouring");
  auto probe = [&](Colour col) -> std::optional<std::pair<Colour, std::vector<VertexSet>>> {
    auto hit = find_clique_union(colour_class(c, col), p);
    if (hit) return std::make_pair(col, *hit);
    return std::nullopt;
  };
  if (colour) return probe(*colour);
  if (auto r = probe(Colour::Red)) return r;
  return probe(Colour::Blue);
}

namespace {

constexpr std::size_t kMaxWords = (kMaxVertices * (kMaxVertices - 1) / 2 + 63) / 64;

struct EdgeMask {
  std::array<std::uint64_t, kMaxWords> w{};

  void set(int bit) { w[static_cast<std::size_t>(bit) / 64] |= std::uint64_t{1} << (bit % 64); }
  bool test(int bit) const {
    return (w[static_cast<std::size_t>(bit) / 64] >> (bit % 64)) & 1u;
  }
};

// Flattened placement edge masks for one target colour.
struct TargetMasks {
  std::vector<std::uint64_t> flat;  // count * words
  std::size_t count = 0;
};

struct SearchState {
  EdgeMask red, blue;
  int unset;
};

class Engine {
public:
  Engine(const Graph& g, const Pattern& red, const Pattern& blue, const ArrowOptions& opts)
      : g_(g), opts_(opts) {
    edges_ = g.edges();
    m_ = static_cast<int>(edges_.size());
    words_ = std::max<std::size_t>(1, (static_cast<std::size_t>(m_) + 63) / 64);
    symmetric_ = red.sizes == blue.sizes;
    red_pattern_ = red;
    blue_pattern_ = blue;
    precomputed_ = count_placements(g, red, opts.placement_limit) <= opts.placement_limit &&
                   count_placements(g, blue, opts.placement_limit) <= opts.placement_limit;
    if (precomputed_) {
      load(red, red_);
      if (symmetric_)
        blue_ = red_;
      else
        load(blue, blue_);
    }
  }

  ArrowResult run() {
    auto start = std::chrono::steady_clock::now();
    ArrowResult result;
    nodes_ = 0;

    bool satisfiable;
    SearchState root;
    root.unset = m_;
    if (opts_.threads > 1 && precomputed_)
      satisfiable = decide_parallel(root);
    else
      satisfiable = decide(root, symmetric_);

    if (!satisfiable) {
      result.verdict = Verdict::Arrows;
    } else {
      result.verdict = Verdict::NotArrows;
      if (opts_.want_witness) {
        SearchState s;
        s.unset = m_;
        Colouring witness(g_);
        if (!lex_min(s, witness)) throw error("internal: witness search lost a known colouring");
        // canonicalise by colour swap if the swapped colouring is smaller
        // (never fires for a true lexicographic minimum; kept as a guard)
        if (symmetric_) {
          Colouring swapped = witness.swapped();
          if (lex_less(swapped, witness)) witness = swapped;
        }
        validate(witness);
        result.witness = std::move(witness);
      } else {
        result.witness = std::nullopt;
      }
    }
    result.stats.nodes = nodes_;
    result.stats.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
  }

private:
  void load(const Pattern& p, TargetMasks& t) {
    auto placements = pattern_placements(g_, p);
    t.count = placements.size();
    t.flat.assign(t.count * words_, 0);
    for (std::size_t i = 0; i < placements.size(); ++i)
      for (int e : placements[i].edge_ids)
        t.flat[i * words_ + static_cast<std::size_t>(e) / 64] |= std::uint64_t{1} << (e % 64);
  }

  // ---- propagation ----------------------------------------------------

  enum class Prop { Conflict, Open, AllDead };

  // Colour all edges forced by near-complete placements. Returns Conflict if
  // a placement is already monochromatic, AllDead when no placement can still
  // become monochromatic.
  Prop propagate(SearchState& s, kernels::ScanResult* out_red, kernels::ScanResult* out_blue) {
    const auto& k = kernels::active_backend();
    while (true) {
      kernels::ScanResult r =
          k.min_missing(red_.flat.data(), red_.count, words_, s.blue.w.data(), s.red.w.data());
      if (r.missing == 0) return Prop::Conflict;
      kernels::ScanResult b =
          k.min_missing(blue_.flat.data(), blue_.count, words_, s.red.w.data(), s.blue.w.data());
      if (b.missing == 0) return Prop::Conflict;
      if (r.missing == 1) {
        force(s, r.index, red_, s.red, EdgeColour::Blue);
        continue;
      }
      if (b.missing == 1) {
        force(s, b.index, blue_, s.blue, EdgeColour::Red);
        continue;
      }
      if (out_red) *out_red = r;
      if (out_blue) *out_blue = b;
      return (r.index == kernels::npos && b.index == kernels::npos) ? Prop::AllDead : Prop::Open;
    }
  }

  void force(SearchState& s, std::size_t placement, const TargetMasks& t, const EdgeMask& have,
             EdgeColour colour) {
    // the placement has exactly one edge outside `have`; that edge gets the
    // opposite colour
    const std::uint64_t* mask = t.flat.data() + placement * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t missing = mask[w] & ~have.w[w];
      if (missing) {
        int e = static_cast<int>(w * 64) + std::countr_zero(missing);
        assign(s, e, colour);
        return;
      }
    }
    throw error("internal: unit placement without a missing edge");
  }

  void assign(SearchState& s, int e, EdgeColour c) {
    (c == EdgeColour::Red ? s.red : s.blue).set(e);
    --s.unset;
  }

  int lowest_unset(const SearchState& s) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t free = ~(s.red.w[w] | s.blue.w[w]);
      if (w == words_ - 1 && m_ % 64 != 0) free &= (std::uint64_t{1} << (m_ % 64)) - 1;
      if (free) return static_cast<int>(w * 64) + std::countr_zero(free);
    }
    return -1;
  }

  // Branch on the lowest unset edge of the placement closest to completion;
  // the red side wins ties for determinism. first_colour blocks that
  // placement, which reaches avoiding colourings sooner.
  std::pair<int, EdgeColour> branch_choice(const SearchState& s, const kernels::ScanResult& r,
                                           const kernels::ScanResult& b) const {
    if (opts_.branch == ArrowOptions::Branch::LowestIndex)
      return {lowest_unset(s), EdgeColour::Red};
    bool red_side = r.missing <= b.missing;
    const TargetMasks& t = red_side ? red_ : blue_;
    const EdgeMask& have = red_side ? s.red : s.blue;
    std::size_t idx = red_side ? r.index : b.index;
    EdgeColour blocker = red_side ? EdgeColour::Blue : EdgeColour::Red;
    const std::uint64_t* mask = t.flat.data() + idx * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t missing = mask[w] & ~have.w[w];
      if (missing) return {static_cast<int>(w * 64) + std::countr_zero(missing), blocker};
    }
    return {lowest_unset(s), EdgeColour::Red};
  }

  // ---- decision search -------------------------------------------------

  bool decide(SearchState s, bool break_symmetry) {
    ++nodes_;
    if (cancel_ && cancel_->load(std::memory_order_relaxed)) return false;
    if (!precomputed_) return decide_onthefly(s);
    kernels::ScanResult r, b;
    switch (propagate(s, &r, &b)) {
      case Prop::Conflict:
        return false;
      case Prop::AllDead:
        return true;
      case Prop::Open:
        break;
    }
    if (s.unset == 0) return true;
    auto [e, first] = branch_choice(s, r, b);
    if (e < 0) return true;
    if (break_symmetry) first = EdgeColour::Red;  // first branched edge fixed to red
    EdgeColour second = first == EdgeColour::Red ? EdgeColour::Blue : EdgeColour::Red;
    SearchState left = s;
    assign(left, e, first);
    if (decide(std::move(left), false)) return true;
    if (break_symmetry) return false;
    assign(s, e, second);
    return decide(std::move(s), false);
  }

  // Work splitting: expand the root into a frontier, solve subtrees in a
  // pool. The verdict cannot depend on the schedule; only stats do.
  bool decide_parallel(const SearchState& root) {
    std::deque<SearchState> frontier{root};
    std::size_t want = static_cast<std::size_t>(opts_.threads) * 8;
    bool first_branch = symmetric_;
    while (frontier.size() < want) {
      SearchState s = frontier.front();
      ++nodes_;
      kernels::ScanResult r, b;
      switch (propagate(s, &r, &b)) {
        case Prop::Conflict:
          frontier.pop_front();
          if (frontier.empty()) return false;
          continue;
        case Prop::AllDead:
          return true;
        case Prop::Open:
          break;
      }
      if (s.unset == 0) return true;
      frontier.pop_front();
      auto [e, first] = branch_choice(s, r, b);
      if (first_branch) first = EdgeColour::Red;
      EdgeColour second = first == EdgeColour::Red ? EdgeColour::Blue : EdgeColour::Red;
      SearchState left = s;
      assign(left, e, first);
      frontier.push_back(std::move(left));
      if (!first_branch) {
        assign(s, e, second);
        frontier.push_back(std::move(s));
      }
      first_branch = false;
    }

    std::vector<SearchState> jobs(frontier.begin(), frontier.end());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> sat{false};
    std::atomic<std::uint64_t> total_nodes{0};
    auto worker = [&]() {
      Engine local(*this);
      local.nodes_ = 0;
      local.cancel_ = &sat;
      while (!sat.load(std::memory_order_relaxed)) {
        std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) break;
        if (local.decide(jobs[i], false)) sat.store(true);
      }
      total_nodes.fetch_add(local.nodes_);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < opts_.threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    nodes_ += total_nodes.load();
    return sat.load();
  }

  // Fallback without placement lists: detect completed monochromatic copies
  // directly on the forced colour classes.
  bool decide_onthefly(SearchState& s) {
    if (has_complete_mono(s)) return false;
    int e = lowest_unset(s);
    if (e < 0) return true;
    SearchState left = s;
    assign(left, e, EdgeColour::Red);
    ++nodes_;
    if (decide_onthefly(left)) return true;
    assign(s, e, EdgeColour::Blue);
    ++nodes_;
    return decide_onthefly(s);
  }

  bool has_complete_mono(const SearchState& s) {
    return mono_in_mask(s.red, red_pattern_) || mono_in_mask(s.blue, blue_pattern_);
  }

  bool mono_in_mask(const EdgeMask& have, const Pattern& p) {
    Graph cls(g_.vertex_count());
    for (int e = 0; e < m_; ++e)
      if (have.test(e)) cls.add_edge(edges_[static_cast<std::size_t>(e)].first,
                                     edges_[static_cast<std::size_t>(e)].second);
    return find_clique_union(cls, p).has_value();
  }

  // ---- lexicographically first witness ----------------------------------

  // Branches on the lowest unset edge, red first; propagation only assigns
  // forced values, so the first total colouring found is the lex minimum.
  bool lex_min(SearchState s, Colouring& out) {
    ++nodes_;
    if (precomputed_) {
      switch (propagate(s, nullptr, nullptr)) {
        case Prop::Conflict:
          return false;
        case Prop::AllDead:
          fill_remaining_red(s);
          emit(s, out);
          return true;
        case Prop::Open:
          break;
      }
    } else if (has_complete_mono(s)) {
      return false;
    }
    if (s.unset == 0) {
      emit(s, out);
      return true;
    }
    int e = lowest_unset(s);
    SearchState left = s;
    assign(left, e, EdgeColour::Red);
    if (lex_min(std::move(left), out)) return true;
    assign(s, e, EdgeColour::Blue);
    return lex_min(std::move(s), out);
  }

  void fill_remaining_red(SearchState& s) {
    for (int e = 0; e < m_; ++e)
      if (!s.red.test(e) && !s.blue.test(e)) assign(s, e, EdgeColour::Red);
  }

  void emit(const SearchState& s, Colouring& out) const {
    for (int e = 0; e < m_; ++e)
      out.set(e, s.red.test(e) ? EdgeColour::Red : EdgeColour::Blue);
  }

  bool lex_less(const Colouring& a, const Colouring& b) const {
    for (int e = 0; e < m_; ++e) {
      if (a.at(e) == b.at(e)) continue;
      return a.at(e) == EdgeColour::Red;
    }
    return false;
  }

  void validate(const Colouring& witness) {
    if (find_mono(witness, red_pattern_, Colour::Red))
      throw error("internal: witness contains a red copy of the pattern");
    if (find_mono(witness, blue_pattern_, Colour::Blue))
      throw error("internal: witness contains a blue copy of the pattern");
  }

  const Graph& g_;
  ArrowOptions opts_;
  const std::atomic<bool>* cancel_ = nullptr;
  std::vector<std::pair<int, int>> edges_;
  int m_ = 0;
  std::size_t words_ = 1;
  bool symmetric_ = false;
  bool precomputed_ = true;
  Pattern red_pattern_, blue_pattern_;
  TargetMasks red_, blue_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ArrowResult arrows_pair(const Graph& g, const Pattern& red, const Pattern& blue,
                        const ArrowOptions& opts) {
  Engine engine(g, red, blue, opts);
  return engine.run();
}

ArrowResult arrows(const Graph& g, const Pattern& p, const ArrowOptions& opts) {
  return arrows_pair(g, p, p, opts);
}

MinimalityReport is_ramsey_minimal(const Graph& g, const Pattern& p, const ArrowOptions& opts) {
  MinimalityReport report;
  ArrowOptions quiet = opts;
  quiet.want_witness = false;
  report.is_ramsey = arrows(g, p, quiet).verdict == Verdict::Arrows;
  for (auto [u, v] : g.edges()) {
    if (arrows(delete_edge(g, u, v), p, quiet).verdict == Verdict::NotArrows)
      report.critical_edges.emplace_back(u, v);
  }
  bool no_isolated = true;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) no_isolated = false;
  report.is_minimal = report.is_ramsey &&
                      report.critical_edges.size() == g.edges().size() && no_isolated;
  return report;
}

}  // namespace ramsey
