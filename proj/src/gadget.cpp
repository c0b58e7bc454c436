#include "ramsey/gadget.hpp"

#include <algorithm>
#include <numeric>

namespace ramsey {

bool rule_fixes(Rule r) {
  return r == Rule::ForceRed || r == Rule::ForceBlue || r == Rule::KnownRed ||
         r == Rule::KnownBlue;
}

bool rule_fixes_colour(Rule r, Colour c) {
  if (c == Colour::Red) return r == Rule::ForceRed || r == Rule::KnownRed;
  return r == Rule::ForceBlue || r == Rule::KnownBlue;
}

bool rule_original(Rule r) {
  return r == Rule::Keep || r == Rule::KnownRed || r == Rule::KnownBlue;
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::ForceRed: return "red";
    case Rule::ForceBlue: return "blue";
    case Rule::Keep: return "keep";
    case Rule::KnownRed: return "known-red";
    case Rule::KnownBlue: return "known-blue";
    case Rule::Absent: return "absent";
  }
  return "?";
}

Rule rule_from_name(const std::string& name) {
  if (name == "red") return Rule::ForceRed;
  if (name == "blue") return Rule::ForceBlue;
  if (name == "keep") return Rule::Keep;
  if (name == "known-red") return Rule::KnownRed;
  if (name == "known-blue") return Rule::KnownBlue;
  if (name == "absent") return Rule::Absent;
  throw error("unknown rule name: " + name);
}

std::string SizeExpr::str() const {
  if (coeff == 0) return std::to_string(base);
  std::string out;
  if (coeff == 1)
    out = "n";
  else
    out = std::to_string(coeff) + "n";
  if (base > 0) out += "+" + std::to_string(base);
  if (base < 0) out += std::to_string(base);
  return out;
}

int GadgetSpec::class_index(std::string_view name) const {
  for (int i = 0; i < class_count(); ++i)
    if (class_names[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

std::size_t GadgetSpec::pair_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  // upper triangle, rows a < b
  int k = class_count();
  return static_cast<std::size_t>(a * (2 * k - a - 1) / 2 + (b - a - 1));
}

void GadgetSpec::init(std::vector<std::pair<std::string, SizeExpr>> classes) {
  class_names.clear();
  sizes.clear();
  for (auto& [nm, sz] : classes) {
    class_names.push_back(std::move(nm));
    sizes.push_back(sz);
  }
  int k = class_count();
  internal.assign(static_cast<std::size_t>(k), Rule::Keep);
  boundary.assign(static_cast<std::size_t>(k), Rule::Keep);
  pairs.assign(static_cast<std::size_t>(k * (k - 1) / 2), PairRule{});
}

int Profile::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0) + outside;
}

bool CaseReport::passes() const {
  if (!violations.empty()) return false;
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

// ---------------------------------------------------------------------------
// apply

Colouring apply_gadget(const Colouring& c, const GadgetSpec& spec,
                       const std::map<std::string, VertexSet>& placement, int n) {
  if (!c.total()) throw error("apply_gadget requires a total colouring");
  int k = spec.class_count();
  std::vector<VertexSet> sets(static_cast<std::size_t>(k), 0);
  VertexSet used = 0;
  for (const auto& [name, vs] : placement) {
    int i = spec.class_index(name);
    if (i < 0) throw error("placement names unknown class: " + name);
    if (vs & used) throw error("placement classes overlap");
    if (vs & ~c.graph().all_vertices()) throw error("placement outside the graph");
    used |= vs;
    sets[static_cast<std::size_t>(i)] = vs;
  }
  for (int i = 0; i < k; ++i) {
    int want = spec.sizes[static_cast<std::size_t>(i)].eval(n);
    if (want < 0) throw error("negative class size at this n");
    if (set_size(sets[static_cast<std::size_t>(i)]) != want)
      throw error("placement size mismatch for class " +
                  spec.class_names[static_cast<std::size_t>(i)]);
  }

  std::vector<int> cls(static_cast<std::size_t>(c.graph().vertex_count()), -1);
  for (int i = 0; i < k; ++i)
    for (int v : set_vertices(sets[static_cast<std::size_t>(i)]))
      cls[static_cast<std::size_t>(v)] = i;
  auto pos_in_class = [&](int v, int i) {
    std::vector<int> vs = set_vertices(sets[static_cast<std::size_t>(i)]);
    return static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin());
  };

  Colouring out = c;
  for (auto [u, v] : c.graph().edges()) {
    int cu = cls[static_cast<std::size_t>(u)], cv = cls[static_cast<std::size_t>(v)];
    Rule rule = Rule::Keep;
    if (cu >= 0 && cu == cv) {
      rule = spec.internal[static_cast<std::size_t>(cu)];
    } else if (cu >= 0 && cv >= 0) {
      const PairRule& pr = spec.pair(cu, cv);
      if (pr.is_mixed()) {
        int a = std::min(cu, cv), b = std::max(cu, cv);
        int row = pos_in_class(a == cu ? u : v, a);
        int col = pos_in_class(a == cu ? v : u, b);
        rule = pr.mixed->at(row, col);
      } else {
        rule = pr.rule;
      }
    } else if (cu >= 0 || cv >= 0) {
      rule = spec.boundary[static_cast<std::size_t>(cu >= 0 ? cu : cv)];
    }
    switch (rule) {
      case Rule::ForceRed:
        out.set(u, v, EdgeColour::Red);
        break;
      case Rule::ForceBlue:
        out.set(u, v, EdgeColour::Blue);
        break;
      case Rule::Absent:
        throw error("edge declared absent is present in the graph");
      default:
        break;  // Keep / Known: retain
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// case analysis

namespace {

bool mixed_choice_feasible(const GadgetSpec& spec, int n, const Profile& profile, Colour x) {
  // classes touched by an active Mixed pair need concrete vertex choices
  int k = spec.class_count();
  std::vector<std::pair<int, int>> active;  // (a, b) with both counts > 0
  std::vector<bool> involved(static_cast<std::size_t>(k), false);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (profile.counts[static_cast<std::size_t>(a)] == 0 ||
          profile.counts[static_cast<std::size_t>(b)] == 0)
        continue;
      if (spec.pair(a, b).is_mixed()) {
        active.emplace_back(a, b);
        involved[static_cast<std::size_t>(a)] = involved[static_cast<std::size_t>(b)] = true;
      }
    }
  if (active.empty()) return true;

  std::vector<int> involved_classes;
  for (int i = 0; i < k; ++i)
    if (involved[static_cast<std::size_t>(i)]) involved_classes.push_back(i);

  // choose a subset of positions per involved class, then check all cells
  std::vector<std::uint32_t> choice(involved_classes.size(), 0);
  std::function<bool(std::size_t)> pick = [&](std::size_t idx) -> bool {
    if (idx == involved_classes.size()) {
      for (auto [a, b] : active) {
        const MixedMatrix& mm = *spec.pair(a, b).mixed;
        std::size_t ia = static_cast<std::size_t>(
            std::find(involved_classes.begin(), involved_classes.end(), a) -
            involved_classes.begin());
        std::size_t ib = static_cast<std::size_t>(
            std::find(involved_classes.begin(), involved_classes.end(), b) -
            involved_classes.begin());
        for (int r = 0; r < mm.rows; ++r) {
          if (!((choice[ia] >> r) & 1u)) continue;
          for (int col = 0; col < mm.cols; ++col) {
            if (!((choice[ib] >> col) & 1u)) continue;
            Rule cell = mm.at(r, col);
            if (cell != Rule::Keep && !rule_fixes_colour(cell, x)) return false;
          }
        }
      }
      return true;
    }
    int cl = involved_classes[idx];
    int size = spec.sizes[static_cast<std::size_t>(cl)].eval(n);
    int want = profile.counts[static_cast<std::size_t>(cl)];
    // all subsets of {0..size-1} with `want` bits
    for (std::uint32_t s = 0; s < (1u << size); ++s) {
      if (std::popcount(s) != want) continue;
      choice[idx] = s;
      if (pick(idx + 1)) return true;
    }
    return false;
  };
  return pick(0);
}

}  // namespace

bool profile_feasible(const GadgetSpec& spec, int n, const Profile& profile, Colour x) {
  int k = spec.class_count();
  for (int i = 0; i < k; ++i) {
    int ci = profile.counts[static_cast<std::size_t>(i)];
    if (ci >= 2 && rule_fixes(spec.internal[static_cast<std::size_t>(i)]) &&
        !rule_fixes_colour(spec.internal[static_cast<std::size_t>(i)], x))
      return false;
    if (ci >= 1 && profile.outside >= 1) {
      Rule b = spec.boundary[static_cast<std::size_t>(i)];
      if (rule_fixes(b) && !rule_fixes_colour(b, x)) return false;
      if (b == Rule::Absent) return false;
    }
  }
  for (int a = 0; a < k; ++a) {
    if (profile.counts[static_cast<std::size_t>(a)] == 0) continue;
    for (int b = a + 1; b < k; ++b) {
      if (profile.counts[static_cast<std::size_t>(b)] == 0) continue;
      const PairRule& pr = spec.pair(a, b);
      if (pr.is_mixed()) continue;  // handled below
      if (pr.rule == Rule::Absent) return false;
      if (rule_fixes(pr.rule) && !rule_fixes_colour(pr.rule, x)) return false;
    }
  }
  return mixed_choice_feasible(spec, n, profile, x);
}

namespace {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

long long capped_composition_count(const std::vector<int>& caps, int outside_cap, int total) {
  std::vector<int> all = caps;
  all.push_back(outside_cap);
  long long q = static_cast<long long>(all.size());
  long long count = 0;
  std::size_t subsets = std::size_t{1} << all.size();
  for (std::size_t s = 0; s < subsets; ++s) {
    long long rem = total;
    int sign = 1;
    for (std::size_t i = 0; i < all.size(); ++i)
      if ((s >> i) & 1u) {
        rem -= all[i] + 1;
        sign = -sign;
      }
    if (rem < 0) continue;
    count += sign * binomial(rem + q - 1, q - 1);
  }
  return count;
}

CaseReport analyze_gadget_cases(const GadgetSpec& spec, int n, int clique_size,
                                const std::vector<ConsequenceClass>& conclusions) {
  if (clique_size < 3) throw error("clique size must be at least 3");
  int k = spec.class_count();
  std::vector<int> caps;
  for (int i = 0; i < k; ++i) {
    int size = spec.sizes[static_cast<std::size_t>(i)].eval(n);
    if (size < 0) throw error("negative class size at this n");
    caps.push_back(std::min(size, clique_size));
  }

  CaseReport report;
  Profile profile;
  profile.counts.assign(static_cast<std::size_t>(k), 0);

  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == k) {
      if (remaining > clique_size) return;  // outside cap = clique size
      profile.outside = remaining;
      ++report.profiles_total;
      for (Colour x : {Colour::Red, Colour::Blue}) {
        if (!profile_feasible(spec, n, profile, x)) continue;
        ++report.profiles_feasible;
        CaseRow row{profile, x, ""};
        for (const auto& conclusion : conclusions) {
          if (conclusion.predicate(profile, x, spec, n)) {
            row.conclusion = conclusion.name;
            break;
          }
        }
        if (row.conclusion.empty())
          report.violations.push_back(row);
        else
          report.rows.push_back(row);
      }
      return;
    }
    for (int c = 0; c <= std::min(caps[static_cast<std::size_t>(idx)], remaining); ++c) {
      profile.counts[static_cast<std::size_t>(idx)] = c;
      rec(idx + 1, remaining - c);
    }
    profile.counts[static_cast<std::size_t>(idx)] = 0;
  };
  rec(0, clique_size);
  return report;
}

// ---------------------------------------------------------------------------
// consequence-class building blocks

namespace detail {

bool rule_ok_original(Rule r, Colour x) {
  if (r == Rule::Keep) return true;
  if (r == Rule::KnownRed) return x == Colour::Red;
  if (r == Rule::KnownBlue) return x == Colour::Blue;
  return false;
}

// After discarding vertices, can at least `min_remaining` survive such that
// every edge among them retains its original colour (and so forms a
// monochromatic clique in the original colouring), the support avoids
// `forbidden`, and the in-gadget support is a subset of one allowed set?
bool survives_in_original(const Profile& p, Colour x, const GadgetSpec& spec, int n,
                          int min_remaining, const std::vector<int>& forbidden,
                          const std::vector<std::vector<int>>& allowed_supports) {
  (void)n;
  int k = spec.class_count();
  std::vector<bool> banned(static_cast<std::size_t>(k), false);
  for (int f : forbidden) banned[static_cast<std::size_t>(f)] = true;

  for (const auto& allowed : allowed_supports) {
    std::vector<int> candidates;
    for (int i : allowed)
      if (!banned[static_cast<std::size_t>(i)] && p.counts[static_cast<std::size_t>(i)] > 0)
        candidates.push_back(i);

    // retained count per class: 0, 1, or everything (only the >=2 threshold
    // matters for internal rules)
    std::vector<int> retained(candidates.size(), 0);
    std::vector<int> outside_options{p.outside};
    if (p.outside > 0) outside_options.push_back(0);

    std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
      if (idx == candidates.size()) {
        for (int keep_outside : outside_options) {
          int total = keep_outside;
          for (int r : retained) total += r;
          if (total < min_remaining) continue;
          bool ok = true;
          for (std::size_t i = 0; i < candidates.size() && ok; ++i) {
            if (retained[i] == 0) continue;
            int ci = candidates[i];
            if (retained[i] >= 2 &&
                !rule_ok_original(spec.internal[static_cast<std::size_t>(ci)], x))
              ok = false;
            if (keep_outside >= 1 &&
                !rule_ok_original(spec.boundary[static_cast<std::size_t>(ci)], x))
              ok = false;
            for (std::size_t j = i + 1; j < candidates.size() && ok; ++j) {
              if (retained[j] == 0) continue;
              const PairRule& pr = spec.pair(ci, candidates[j]);
              if (pr.is_mixed() || !rule_ok_original(pr.rule, x)) ok = false;
            }
          }
          if (ok) return true;
        }
        return false;
      }
      int cnt = p.counts[static_cast<std::size_t>(candidates[idx])];
      for (int r : {0, 1, cnt}) {
        if (r > cnt) continue;
        retained[idx] = r;
        if (rec(idx + 1)) return true;
        if (r == cnt) break;  // cnt <= 1 would retry the same value
      }
      return false;
    };
    if (rec(0)) return true;
  }
  return false;
}

std::vector<int> all_classes(const GadgetSpec& spec) {
  std::vector<int> out(static_cast<std::size_t>(spec.class_count()));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace detail

namespace {

using Pred = std::function<bool(const Profile&, Colour, const GadgetSpec&, int)>;

ConsequenceClass survivor_class(std::string name, std::optional<Colour> colour, int min_remaining,
                                std::vector<std::string> forbidden,
                                std::vector<std::vector<std::string>> allowed, Pred extra = {}) {
  ConsequenceClass out;
  out.name = std::move(name);
  out.predicate = [=](const Profile& p, Colour x, const GadgetSpec& spec, int n) {
    if (colour && *colour != x) return false;
    if (extra && !extra(p, x, spec, n)) return false;
    std::vector<int> forb;
    for (const auto& f : forbidden) {
      int idx = spec.class_index(f);
      if (idx < 0) throw error("conclusion names unknown class: " + f);
      forb.push_back(idx);
    }
    std::vector<std::vector<int>> allow;
    if (allowed.empty()) {
      allow.push_back(detail::all_classes(spec));
    } else {
      for (const auto& set : allowed) {
        std::vector<int> idx;
        for (const auto& nm : set) {
          int i = spec.class_index(nm);
          if (i < 0) throw error("conclusion names unknown class: " + nm);
          idx.push_back(i);
        }
        allow.push_back(std::move(idx));
      }
    }
    return detail::survives_in_original(p, x, spec, n, min_remaining, forb, allow);
  };
  return out;
}

int count_of(const Profile& p, const GadgetSpec& spec, const char* name) {
  int i = spec.class_index(name);
  return i < 0 ? 0 : p.counts[static_cast<std::size_t>(i)];
}

}  // namespace

std::vector<ConsequenceClass> gadget_conclusions(const std::string& name, const GadgetSpec& spec,
                                                 int n) {
  (void)spec;
  std::vector<ConsequenceClass> out;
  if (name == "lemma1") {
    out.push_back(survivor_class("mono-K(n-1)-avoiding-x-and-y", std::nullopt, n - 1,
                                 {"V_R", "V_B", "x_R", "y_R", "x_B", "y_B"}, {{"V'"}}));
    out.push_back(survivor_class("mono-K(n-1)-meeting-only-x", std::nullopt, n - 1,
                                 {"V_R", "V_B", "x_R", "y_R", "x_B", "y_B"}, {{"x"}}));
    out.push_back(survivor_class("mono-K(n-1)-meeting-only-y", std::nullopt, n - 1,
                                 {"V_R", "V_B", "x_R", "y_R", "x_B", "y_B"}, {{"y"}}));
  } else if (name == "lemma3_stage1") {
    out.push_back(
        survivor_class("red-K(n-1)-disjoint-from-core", Colour::Red, n - 1,
                       {"a", "b", "V_rest"}, {{}}));
    out.push_back(survivor_class(
        "red-Kn-meeting-core-in-ab-only", Colour::Red, n, {"V_rest"}, {{"a", "b"}},
        [](const Profile& p, Colour, const GadgetSpec& s, int) {
          return count_of(p, s, "V_rest") == 0;
        }));
    out.push_back(survivor_class("blue-Kn-in-original", Colour::Blue, n, {}, {}));
  } else if (name == "lemma3_stage2") {
    out.push_back(survivor_class("red-K(n-1)-disjoint-from-second-clique", Colour::Red, n - 1,
                                 {"a", "b", "c", "d", "W_core"}, {{"V_rest"}}));
    out.push_back(survivor_class("red-K(n-1)-disjoint-from-first-clique", Colour::Red, n - 1,
                                 {"a", "b", "d", "W_core", "V_rest"}, {{"c"}}));
    out.push_back(survivor_class("blue-Kn-in-original", Colour::Blue, n, {}, {}));
  } else if (name == "theorem1_final") {
    ConsequenceClass avoids;
    avoids.name = "mono-Kn-avoiding-both-cores";
    avoids.predicate = [](const Profile& p, Colour x, const GadgetSpec& s, int nn) {
      if (count_of(p, s, "W_R") != 0 || count_of(p, s, "W_B") != 0) return false;
      return detail::survives_in_original(p, x, s, nn, nn, {}, {detail::all_classes(s)});
    };
    out.push_back(std::move(avoids));
    out.push_back(survivor_class(
        "red-K(n-1)-disjoint-from-red-core", Colour::Red, n - 1, {"W_R", "X_R"}, {{"X_B"}},
        [](const Profile& p, Colour, const GadgetSpec& s, int) {
          return count_of(p, s, "W_B") == 0 && count_of(p, s, "W_R") == 1 &&
                 count_of(p, s, "X_R") == 0;
        }));
    out.push_back(survivor_class(
        "blue-K(n-1)-disjoint-from-blue-core", Colour::Blue, n - 1, {"W_B", "X_B"}, {{"X_R"}},
        [](const Profile& p, Colour, const GadgetSpec& s, int) {
          return count_of(p, s, "W_R") == 0 && count_of(p, s, "W_B") == 1 &&
                 count_of(p, s, "X_B") == 0;
        }));
  } else if (name == "t2_first") {
    ConsequenceClass next_stage;
    next_stage.name = "red-K3-on-kept-edge-plus-one-new-vertex";
    next_stage.predicate = [](const Profile& p, Colour x, const GadgetSpec& s, int) {
      return x == Colour::Red && count_of(p, s, "y_R") == 1 && count_of(p, s, "z_R") == 1 &&
             p.outside == 1;
    };
    out.push_back(std::move(next_stage));
    out.push_back(
        survivor_class("red-K2-disjoint-from-triangle", Colour::Red, 2, {"x_R", "y_R", "z_R"},
                       {{}}));
    out.push_back(survivor_class("blue-K3-in-original", Colour::Blue, 3, {}, {}));
  } else if (name == "t2_path") {
    out.push_back(survivor_class("red-K2-avoiding-first-triangle", Colour::Red, 2,
                                 {"x_R", "y_R", "z_R"}, {{"v_R"}}));
    out.push_back(survivor_class("red-K2-avoiding-second-triangle", Colour::Red, 2,
                                 {"v_R", "y_R", "z_R"}, {{"x_R"}}));
    out.push_back(survivor_class("blue-K3-in-original", Colour::Blue, 3, {}, {}));
  } else if (name == "t2_5v") {
    ConsequenceClass outside2;
    outside2.name = "mono-K2-outside";
    outside2.predicate = [](const Profile& p, Colour, const GadgetSpec&, int) {
      return p.outside >= 2;
    };
    out.push_back(std::move(outside2));
    ConsequenceClass red2;
    red2.name = "red-K3-needs-common-red-neighbour";
    red2.predicate = [](const Profile& p, Colour x, const GadgetSpec& s, int) {
      return x == Colour::Red && count_of(p, s, "y_R") == 1 && count_of(p, s, "z_R") == 1 &&
             p.outside == 1;
    };
    out.push_back(std::move(red2));
    ConsequenceClass blue2;
    blue2.name = "blue-K3-needs-common-blue-neighbour";
    blue2.predicate = [](const Profile& p, Colour x, const GadgetSpec& s, int) {
      return x == Colour::Blue && count_of(p, s, "y_B") == 1 && count_of(p, s, "z_B") == 1 &&
             p.outside == 1;
    };
    out.push_back(std::move(blue2));
  } else if (name == "t2_k62missing" || name == "cor_small_k4") {
    ConsequenceClass outside2;
    outside2.name = "mono-K2-outside";
    outside2.predicate = [](const Profile& p, Colour, const GadgetSpec&, int) {
      return p.outside >= 2;
    };
    out.push_back(std::move(outside2));
  } else if (name == "t2_k6missing") {
    ConsequenceClass outside2;
    outside2.name = "mono-K2-outside";
    outside2.predicate = [](const Profile& p, Colour, const GadgetSpec&, int) {
      return p.outside >= 2;
    };
    out.push_back(std::move(outside2));
    ConsequenceClass blocked;
    blocked.name = "blocked-by-attachment-rules";
    blocked.predicate = [](const Profile& p, Colour, const GadgetSpec&, int) {
      return p.outside == 1;
    };
    out.push_back(std::move(blocked));
  } else {
    throw error("no conclusion set for gadget: " + name);
  }
  return out;
}

// ---------------------------------------------------------------------------
// certification

namespace {

Colour fixed_colour(const GadgetSpec& spec, int a, int b) {
  const PairRule& pr = spec.pair(a, b);
  if (!rule_fixes(pr.rule)) throw error("pair colour not fixed");
  return rule_fixes_colour(pr.rule, Colour::Red) ? Colour::Red : Colour::Blue;
}

void lemma1_property_checks(const GadgetSpec& spec, CaseReport& report) {
  int k = spec.class_count();
  auto red = [&](int a, int b) { return rule_fixes_colour(spec.pair(a, b).rule, Colour::Red); };
  auto blue = [&](int a, int b) { return rule_fixes_colour(spec.pair(a, b).rule, Colour::Blue); };

  bool red_k4_free = true, blue_k4_free = true;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        for (int d = c + 1; d < k; ++d) {
          if (red(a, b) && red(a, c) && red(a, d) && red(b, c) && red(b, d) && red(c, d))
            red_k4_free = false;
          if (blue(a, b) && blue(a, c) && blue(a, d) && blue(b, c) && blue(b, d) && blue(c, d))
            blue_k4_free = false;
        }
  report.checks.emplace_back("red-class-graph-K4-free", red_k4_free);
  report.checks.emplace_back("blue-class-graph-K4-free", blue_k4_free);

  std::vector<int> blue_trio{spec.class_index("V_B"), spec.class_index("x_B"),
                             spec.class_index("y_B")};
  std::vector<int> red_trio{spec.class_index("V_R"), spec.class_index("x_R"),
                            spec.class_index("y_R")};
  auto in = [](const std::vector<int>& set, int v) {
    return std::find(set.begin(), set.end(), v) != set.end();
  };
  bool red_tri_ok = true, blue_tri_ok = true;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c) {
        if (red(a, b) && red(a, c) && red(b, c) &&
            !(in(blue_trio, a) || in(blue_trio, b) || in(blue_trio, c)))
          red_tri_ok = false;
        if (blue(a, b) && blue(a, c) && blue(b, c) &&
            !(in(red_trio, a) || in(red_trio, b) || in(red_trio, c)))
          blue_tri_ok = false;
      }
  report.checks.emplace_back("red-triangles-touch-blue-trio", red_tri_ok);
  report.checks.emplace_back("blue-triangles-touch-red-trio", blue_tri_ok);

  bool blue_vertices_red = red(blue_trio[0], blue_trio[1]) && red(blue_trio[0], blue_trio[2]) &&
                           red(blue_trio[1], blue_trio[2]);
  bool red_vertices_blue = blue(red_trio[0], red_trio[1]) && blue(red_trio[0], red_trio[2]) &&
                           blue(red_trio[1], red_trio[2]);
  report.checks.emplace_back("blue-vertex-classes-joined-red", blue_vertices_red);
  report.checks.emplace_back("red-vertex-classes-joined-blue", red_vertices_blue);
  report.checks.emplace_back(
      "core-blue-pair-V_B-V'",
      rule_fixes_colour(spec.pair(spec.class_index("V_B"), spec.class_index("V'")).rule,
                        Colour::Blue));
}

void theorem1_mixed_checks(const GadgetSpec& spec, CaseReport& report) {
  const PairRule& pr = spec.pair(spec.class_index("W_R"), spec.class_index("W_B"));
  if (!pr.is_mixed()) {
    report.checks.emplace_back("mixed-pair-present", false);
    return;
  }
  const MixedMatrix& mm = *pr.mixed;
  if (mm.rows == 1) {
    // special two-edge rule: one red, one blue
    bool ok = mm.cols == 2 && mm.at(0, 0) != mm.at(0, 1) && rule_fixes(mm.at(0, 0)) &&
              rule_fixes(mm.at(0, 1));
    report.checks.emplace_back("mixed-opposite-colours", ok);
    return;
  }
  bool rows_ok = true, cols_ok = true;
  for (int r = 0; r < mm.rows; ++r) {
    bool has_red = false, has_blue = false;
    for (int c = 0; c < mm.cols; ++c) {
      has_red |= rule_fixes_colour(mm.at(r, c), Colour::Red);
      has_blue |= rule_fixes_colour(mm.at(r, c), Colour::Blue);
    }
    rows_ok &= has_red && has_blue;
  }
  for (int c = 0; c < mm.cols; ++c) {
    bool has_red = false, has_blue = false;
    for (int r = 0; r < mm.rows; ++r) {
      has_red |= rule_fixes_colour(mm.at(r, c), Colour::Red);
      has_blue |= rule_fixes_colour(mm.at(r, c), Colour::Blue);
    }
    cols_ok &= has_red && has_blue;
  }
  report.checks.emplace_back("mixed-rows-see-both-colours", rows_ok);
  report.checks.emplace_back("mixed-cols-see-both-colours", cols_ok);
}

// Attachment checks for the all-missing-edges-at-one-vertex instance: every
// outside vertex w with up to four gadget neighbours must admit a safe
// colouring of its edges, case (1) or (2) depending on whether w can see both
// endpoints of the missing edge.
void t2_k6missing_checks(const GadgetSpec& spec, CaseReport& report) {
  int k = spec.class_count();
  int xr = spec.class_index("x_R"), xb = spec.class_index("x_B");

  bool mono_free = true;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c) {
        auto present = [&](int u, int v) { return spec.pair(u, v).rule != Rule::Absent; };
        if (!present(a, b) || !present(a, c) || !present(b, c)) continue;
        Colour cab = fixed_colour(spec, a, b);
        if (cab == fixed_colour(spec, a, c) && cab == fixed_colour(spec, b, c)) mono_free = false;
      }
  report.checks.emplace_back("interior-mono-triangle-free", mono_free);

  bool all_cases_ok = true;
  std::vector<int> subset;
  std::function<void(int)> rec = [&](int from) {
    if (subset.size() == 4) {
      bool has_both = std::find(subset.begin(), subset.end(), xr) != subset.end() &&
                      std::find(subset.begin(), subset.end(), xb) != subset.end();
      if (!has_both) {
        // case 1: a red hamiltonian path whose endpoints are joined blue
        bool found = false;
        std::array<int, 4> p{subset[0], subset[1], subset[2], subset[3]};
        std::sort(p.begin(), p.end());
        do {
          if (fixed_colour(spec, p[0], p[1]) == Colour::Red &&
              fixed_colour(spec, p[1], p[2]) == Colour::Red &&
              fixed_colour(spec, p[2], p[3]) == Colour::Red &&
              fixed_colour(spec, p[0], p[3]) == Colour::Blue) {
            found = true;
            break;
          }
        } while (std::next_permutation(p.begin(), p.end()));
        if (!found) all_cases_ok = false;
      } else {
        // case 2: some centre sees both missing-edge endpoints in one colour
        bool found = false;
        for (int v : subset) {
          if (v == xr || v == xb) continue;
          if (fixed_colour(spec, v, xr) == fixed_colour(spec, v, xb)) found = true;
        }
        if (!found) all_cases_ok = false;
      }
      return;
    }
    for (int v = from; v < k; ++v) {
      subset.push_back(v);
      rec(v + 1);
      subset.pop_back();
    }
  };
  rec(0);
  report.checks.emplace_back("attachment-cases-cover-all-4-subsets", all_cases_ok);
}

}  // namespace

CaseReport certify_gadget(const std::string& name, const GadgetSpec& spec, int n) {
  int clique_size = n;
  if (name.rfind("t2_", 0) == 0 || name == "cor_small_k4") clique_size = 3;
  CaseReport report = analyze_gadget_cases(spec, n, clique_size, gadget_conclusions(name, spec, n));
  if (name == "lemma1") lemma1_property_checks(spec, report);
  if (name == "theorem1_final") theorem1_mixed_checks(spec, report);
  if (name == "t2_k6missing") t2_k6missing_checks(spec, report);
  return report;
}

// ---------------------------------------------------------------------------
// scenario arithmetic

namespace {

void add_check(ScenarioReport& rep, const std::string& invocation, const std::string& ineq,
               long long lhs, long long rhs) {
  rep.checks.push_back({invocation, ineq, lhs, rhs, lhs <= rhs});
}

}  // namespace

ScenarioReport scenario_arithmetic(int n) {
  if (n < 4) throw error("scenario arithmetic needs n >= 4");
  ScenarioReport rep;
  rep.n = n;

  // one K_{n+1} plus a disjoint-enough blue K_n: |V| <= 2n+1, |V_0| = 2n-2
  add_check(rep, "knplus1_step", "2n <= |V|", 2 * n, 2 * n + 1);
  add_check(rep, "knplus1_step", "|V| <= 3n-3", 2 * n + 1, 3 * n - 3);
  add_check(rep, "knplus1_step", "|V0| <= 2n-2", 2 * n - 2, 2 * n - 2);

  // two red copies sharing two vertices, blue copy meeting one of them
  add_check(rep, "overlap_step_1", "2n <= |V|", 2 * n, 3 * n - 3);
  add_check(rep, "overlap_step_1", "|V| <= 3n-3", (2 * n - 2) + (n - 1), 3 * n - 3);
  add_check(rep, "overlap_step_1", "|V0| <= 2n-2", (2 * n - 1) - 1, 2 * n - 2);

  // disjoint blue copy; second red copy reduced by one vertex
  add_check(rep, "overlap_step_2", "|W| = n-3 >= 1", 1, n - 3);
  add_check(rep, "overlap_step_2", "free pair in first copy: 2 <= n-2", 2, n - 2);
  add_check(rep, "overlap_step_2", "2n <= |V|", 2 * n, n + n + (n - 3));
  add_check(rep, "overlap_step_2", "|V| <= 3n-3", n + n + (n - 3), 3 * n - 3);
  add_check(rep, "overlap_step_2", "|V0| <= 2n-2", 2 * n - 2, 2 * n - 2);

  // near-complete overlap of the two red copies, one vertex dropped
  add_check(rep, "overlap_step_3", "2n <= |V|", 2 * n, 3 * n - 3);
  add_check(rep, "overlap_step_3", "|V| <= 3n-3", (2 * n - 2) + n - 1, 3 * n - 3);
  add_check(rep, "overlap_step_3", "|V0| <= 2n-2", 2 * n - 2, 2 * n - 2);

  return rep;
}

bool ScenarioReport::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

// ---------------------------------------------------------------------------
// json

namespace {

nlohmann::json size_to_json(const SizeExpr& s) {
  if (s.coeff == 0) return s.base;
  return s.str();
}

SizeExpr size_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return SizeExpr::constant(j.get<int>());
  std::string s = j.get<std::string>();
  // forms: "n", "n-3", "2n-2", "n+1"
  std::size_t npos_ = s.find('n');
  if (npos_ == std::string::npos) throw error("bad size expression: " + s);
  int coeff = npos_ == 0 ? 1 : std::stoi(s.substr(0, npos_));
  int base = npos_ + 1 < s.size() ? std::stoi(s.substr(npos_ + 1)) : 0;
  return SizeExpr{base, coeff};
}

}  // namespace

nlohmann::json GadgetSpec::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["classes"] = nlohmann::json::array();
  for (int i = 0; i < class_count(); ++i) {
    j["classes"].push_back({{"name", class_names[static_cast<std::size_t>(i)]},
                            {"size", size_to_json(sizes[static_cast<std::size_t>(i)])},
                            {"internal", rule_name(internal[static_cast<std::size_t>(i)])},
                            {"boundary", rule_name(boundary[static_cast<std::size_t>(i)])}});
  }
  j["pairs"] = nlohmann::json::array();
  for (int a = 0; a < class_count(); ++a)
    for (int b = a + 1; b < class_count(); ++b) {
      const PairRule& pr = pair(a, b);
      nlohmann::json pj{{"a", class_names[static_cast<std::size_t>(a)]},
                        {"b", class_names[static_cast<std::size_t>(b)]}};
      if (pr.is_mixed()) {
        pj["rule"] = "mixed";
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < pr.mixed->rows; ++r) {
          nlohmann::json row = nlohmann::json::array();
          for (int c = 0; c < pr.mixed->cols; ++c) row.push_back(rule_name(pr.mixed->at(r, c)));
          rows.push_back(row);
        }
        pj["matrix"] = rows;
      } else {
        pj["rule"] = rule_name(pr.rule);
      }
      j["pairs"].push_back(pj);
    }
  return j;
}

GadgetSpec GadgetSpec::from_json(const nlohmann::json& j) {
  GadgetSpec spec;
  spec.name = j.value("name", "");
  std::vector<std::pair<std::string, SizeExpr>> classes;
  for (const auto& cj : j.at("classes"))
    classes.emplace_back(cj.at("name").get<std::string>(), size_from_json(cj.at("size")));
  spec.init(std::move(classes));
  for (std::size_t i = 0; i < j.at("classes").size(); ++i) {
    const auto& cj = j.at("classes")[i];
    spec.internal[i] = rule_from_name(cj.value("internal", "keep"));
    spec.boundary[i] = rule_from_name(cj.value("boundary", "keep"));
  }
  for (const auto& pj : j.at("pairs")) {
    int a = spec.class_index(pj.at("a").get<std::string>());
    int b = spec.class_index(pj.at("b").get<std::string>());
    if (a < 0 || b < 0) throw error("pair names unknown class");
    std::string rule = pj.at("rule").get<std::string>();
    if (rule == "mixed") {
      MixedMatrix mm;
      const auto& rows = pj.at("matrix");
      mm.rows = static_cast<int>(rows.size());
      mm.cols = mm.rows > 0 ? static_cast<int>(rows[0].size()) : 0;
      for (const auto& row : rows)
        for (const auto& cell : row) mm.cells.push_back(rule_from_name(cell.get<std::string>()));
      spec.pair(a, b) = PairRule{Rule::Keep, std::move(mm)};
    } else {
      spec.pair(a, b) = PairRule{rule_from_name(rule), std::nullopt};
    }
  }
  return spec;
}

nlohmann::json CaseReport::to_json() const {
  nlohmann::json j;
  j["profiles_total"] = profiles_total;
  j["profiles_feasible"] = profiles_feasible;
  auto row_json = [](const CaseRow& r) {
    return nlohmann::json{{"counts", r.profile.counts},
                          {"outside", r.profile.outside},
                          {"colour", r.colour == Colour::Red ? "red" : "blue"},
                          {"conclusion", r.conclusion}};
  };
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) j["rows"].push_back(row_json(r));
  j["violations"] = nlohmann::json::array();
  for (const auto& r : violations) j["violations"].push_back(row_json(r));
  j["checks"] = nlohmann::json::array();
  for (const auto& [nm, ok] : checks) j["checks"].push_back({{"name", nm}, {"pass", ok}});
  j["passes"] = passes();
  return j;
}

nlohmann::json ScenarioReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"invocation", c.invocation},
                           {"inequality", c.inequality},
                           {"lhs", c.lhs},
                           {"rhs", c.rhs},
                           {"holds", c.holds}});
  j["all_hold"] = all_hold();
  return j;
}

}  // namespace ramsey
