// Reconstruction searches for the gadgets whose drawings are not available
// as data. Each search runs over the small space left open by the written
// constraints, in a fixed deterministic order, and returns the first rule set
// that passes its certification.

#include <array>
#include <functional>

#include "ramsey/gadget.hpp"

namespace ramsey {

namespace {

// ---------------------------------------------------------------------------
// stability gadget (lemma1)

struct Lemma1Search {
  // class order: V_R V_B V' x y x_R y_R x_B y_B
  static constexpr int kClasses = 9;
  int n;
  GadgetSpec spec;
  // -1 unassigned, 0 red, 1 blue, per class pair
  std::array<std::array<int, kClasses>, kClasses> colour{};
  std::vector<std::pair<int, int>> free_pairs;
  int i_vr, i_vb, i_vp, i_x, i_y, i_xr, i_yr, i_xb, i_yb;

  explicit Lemma1Search(int n_in) : n(n_in) {
    spec.name = "lemma1";
    SizeExpr big = SizeExpr::linear(1, -3);
    spec.init({{"V_R", big},
               {"V_B", big},
               {"V'", big},
               {"x", SizeExpr::constant(1)},
               {"y", SizeExpr::constant(1)},
               {"x_R", SizeExpr::constant(1)},
               {"y_R", SizeExpr::constant(1)},
               {"x_B", SizeExpr::constant(1)},
               {"y_B", SizeExpr::constant(1)}});
    i_vr = spec.class_index("V_R");
    i_vb = spec.class_index("V_B");
    i_vp = spec.class_index("V'");
    i_x = spec.class_index("x");
    i_y = spec.class_index("y");
    i_xr = spec.class_index("x_R");
    i_yr = spec.class_index("y_R");
    i_xb = spec.class_index("x_B");
    i_yb = spec.class_index("y_B");

    spec.internal[static_cast<std::size_t>(i_vb)] = Rule::ForceRed;
    spec.internal[static_cast<std::size_t>(i_vr)] = Rule::ForceBlue;
    for (int i : {i_vr, i_xr, i_yr}) spec.boundary[static_cast<std::size_t>(i)] = Rule::ForceRed;
    for (int i : {i_vb, i_xb, i_yb}) spec.boundary[static_cast<std::size_t>(i)] = Rule::ForceBlue;

    for (auto& row : colour) row.fill(-1);
    // the written constraints pin these pairs
    fix(i_xb, i_yb, 0);
    fix(i_xb, i_vb, 0);
    fix(i_yb, i_vb, 0);
    fix(i_xr, i_yr, 1);
    fix(i_xr, i_vr, 1);
    fix(i_yr, i_vr, 1);
    fix(i_vb, i_vp, 1);
    for (int a = 0; a < kClasses; ++a)
      for (int b = a + 1; b < kClasses; ++b)
        if (colour[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == -1)
          free_pairs.emplace_back(a, b);
  }

  void fix(int a, int b, int c) {
    colour[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c;
    colour[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = c;
  }

  bool touches(int a, int b, int c, std::initializer_list<int> trio) const {
    for (int t : trio)
      if (a == t || b == t || c == t) return true;
    return false;
  }

  int at(int a, int b) const {
    return colour[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  // Incremental pruning: only inspects triangles and K4s through (a,b).
  bool consistent_after(int a, int b) const {
    int ab = at(a, b);
    for (int c = 0; c < kClasses; ++c) {
      if (c == a || c == b) continue;
      if (at(a, c) != ab || at(b, c) != ab) continue;
      // monochromatic triangle a,b,c
      if (ab == 0 && !touches(a, b, c, {i_vb, i_xb, i_yb})) return false;
      if (ab == 1 && !touches(a, b, c, {i_vr, i_xr, i_yr})) return false;
      for (int d = c + 1; d < kClasses; ++d) {
        if (d == a || d == b) continue;
        if (at(a, d) == ab && at(b, d) == ab && at(c, d) == ab) return false;  // mono K4
      }
    }
    return true;
  }

  bool dfs(std::size_t idx, GadgetSpec* out) {
    if (idx == free_pairs.size()) return finish(out);
    auto [a, b] = free_pairs[idx];
    for (int c : {0, 1}) {
      fix(a, b, c);
      if (consistent_after(a, b) && dfs(idx + 1, out)) return true;
    }
    colour[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = -1;
    colour[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -1;
    return false;
  }

  bool finish(GadgetSpec* out) {
    GadgetSpec candidate = spec;
    for (int a = 0; a < kClasses; ++a)
      for (int b = a + 1; b < kClasses; ++b)
        candidate.pair(a, b).rule = at(a, b) == 0 ? Rule::ForceRed : Rule::ForceBlue;
    CaseReport report = certify_gadget("lemma1", candidate, n);
    if (!report.passes()) return false;
    *out = candidate;
    return true;
  }
};

// ---------------------------------------------------------------------------
// small searched gadgets

// Iterate rules {red, blue} over `pair_slots` and optional boundary choices;
// first certified spec wins. Order: binary/ternary counters, red before blue
// (before keep).
struct SmallSearch {
  std::string name;
  GadgetSpec base;
  std::vector<std::pair<int, int>> pair_slots;
  std::vector<int> boundary_slots;          // classes with an open boundary rule
  std::vector<Rule> boundary_choices;       // candidate rules per open boundary
  std::function<bool(const GadgetSpec&)> prefilter;  // cheap reject, optional

  std::optional<GadgetSpec> run(int n) {
    std::size_t pair_total = std::size_t{1} << pair_slots.size();
    std::size_t boundary_total = 1;
    for (std::size_t i = 0; i < boundary_slots.size(); ++i)
      boundary_total *= boundary_choices.size();

    for (std::size_t pc = 0; pc < pair_total; ++pc) {
      GadgetSpec spec = base;
      for (std::size_t i = 0; i < pair_slots.size(); ++i) {
        auto [a, b] = pair_slots[i];
        spec.pair(a, b).rule = ((pc >> i) & 1u) ? Rule::ForceBlue : Rule::ForceRed;
      }
      if (prefilter && !prefilter(spec)) continue;
      for (std::size_t bc = 0; bc < boundary_total; ++bc) {
        std::size_t rest = bc;
        for (int cls : boundary_slots) {
          spec.boundary[static_cast<std::size_t>(cls)] =
              boundary_choices[rest % boundary_choices.size()];
          rest /= boundary_choices.size();
        }
        if (certify_gadget(name, spec, n).passes()) return spec;
      }
    }
    return std::nullopt;
  }
};

bool interior_mono_triangle_free(const GadgetSpec& spec) {
  int k = spec.class_count();
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const PairRule& ab = spec.pair(a, b);
      if (ab.rule == Rule::Absent) continue;
      for (int c = b + 1; c < k; ++c) {
        const PairRule& ac = spec.pair(a, c);
        const PairRule& bc = spec.pair(b, c);
        if (ac.rule == Rule::Absent || bc.rule == Rule::Absent) continue;
        if (ab.rule == ac.rule && ab.rule == bc.rule) return false;
      }
    }
  return true;
}

GadgetSpec singleton_base(const std::string& name, const std::vector<std::string>& classes) {
  GadgetSpec spec;
  spec.name = name;
  std::vector<std::pair<std::string, SizeExpr>> init;
  for (const auto& c : classes) init.emplace_back(c, SizeExpr::constant(1));
  spec.init(std::move(init));
  return spec;
}

std::optional<GadgetSpec> search_t2_5v() {
  SmallSearch s;
  s.name = "t2_5v";
  s.base = singleton_base("t2_5v", {"x", "y_R", "z_R", "y_B", "z_B"});
  int yr = s.base.class_index("y_R"), zr = s.base.class_index("z_R"),
      yb = s.base.class_index("y_B"), zb = s.base.class_index("z_B"),
      x = s.base.class_index("x");
  s.base.boundary[static_cast<std::size_t>(yr)] = Rule::ForceRed;
  s.base.boundary[static_cast<std::size_t>(zr)] = Rule::ForceRed;
  s.base.boundary[static_cast<std::size_t>(yb)] = Rule::ForceBlue;
  s.base.boundary[static_cast<std::size_t>(zb)] = Rule::ForceBlue;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) s.pair_slots.emplace_back(a, b);
  s.boundary_slots = {x};
  s.boundary_choices = {Rule::ForceRed, Rule::ForceBlue, Rule::Keep};
  s.prefilter = interior_mono_triangle_free;
  return s.run(3);
}

std::optional<GadgetSpec> search_t2_k62missing() {
  SmallSearch s;
  s.name = "t2_k62missing";
  s.base = singleton_base("t2_k62missing", {"x_R", "y_R", "z_R", "x_B", "y_B", "z_B"});
  int xr = s.base.class_index("x_R"), xb = s.base.class_index("x_B"),
      yr = s.base.class_index("y_R"), yb = s.base.class_index("y_B");
  s.base.pair(xr, xb).rule = Rule::Absent;
  s.base.pair(yr, yb).rule = Rule::Absent;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      if (s.base.pair(a, b).rule != Rule::Absent) s.pair_slots.emplace_back(a, b);
  for (int c = 0; c < 6; ++c) s.boundary_slots.push_back(c);
  s.boundary_choices = {Rule::ForceRed, Rule::ForceBlue};
  s.prefilter = interior_mono_triangle_free;
  return s.run(3);
}

std::optional<GadgetSpec> search_t2_k6missing() {
  SmallSearch s;
  s.name = "t2_k6missing";
  s.base = singleton_base("t2_k6missing", {"x_R", "y_R", "z_R", "x_B", "y_B", "z_B"});
  int xr = s.base.class_index("x_R"), xb = s.base.class_index("x_B");
  s.base.pair(xr, xb).rule = Rule::Absent;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      if (s.base.pair(a, b).rule != Rule::Absent) s.pair_slots.emplace_back(a, b);
  // boundaries stay Keep: outside vertices get per-vertex attachment rules
  s.prefilter = interior_mono_triangle_free;
  return s.run(3);
}

std::optional<GadgetSpec> search_cor_small_k4() {
  SmallSearch s;
  s.name = "cor_small_k4";
  s.base = singleton_base("cor_small_k4", {"v1", "v2", "v3", "v4"});
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) s.pair_slots.emplace_back(a, b);
  for (int c = 0; c < 4; ++c) s.boundary_slots.push_back(c);
  s.boundary_choices = {Rule::ForceRed, Rule::ForceBlue, Rule::Keep};
  return s.run(3);
}

}  // namespace

GadgetSpec lemma1_gadget_search(int n) {
  if (n < 4) throw error("lemma1 gadget search needs n >= 4");
  Lemma1Search search(n);
  GadgetSpec out;
  if (!search.dfs(0, &out))
    throw search_exhausted_error("lemma1 gadget search exhausted without a certified rule set");
  return out;
}

GadgetSpec search_gadget(const std::string& name) {
  std::optional<GadgetSpec> found;
  if (name == "t2_5v")
    found = search_t2_5v();
  else if (name == "t2_k62missing")
    found = search_t2_k62missing();
  else if (name == "t2_k6missing")
    found = search_t2_k6missing();
  else if (name == "cor_small_k4")
    found = search_cor_small_k4();
  else
    throw error("unknown searched gadget: " + name);
  if (!found) throw search_exhausted_error("gadget search exhausted without a certified rule set: " + name);
  return *found;
}

}  // namespace ramsey
