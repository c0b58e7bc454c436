#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Edge rules of a recolouring gadget.
//   ForceRed/ForceBlue  overwrite the original colour.
//   Keep                retains the original colour (adversary-controlled).
//   KnownRed/KnownBlue  retained like Keep, but the surrounding argument
//                       guarantees the original colour; certification may
//                       treat the edge as fixed AND original.
//   Absent              the edge is known to be missing from the graph.
enum class Rule : std::uint8_t { ForceRed, ForceBlue, Keep, KnownRed, KnownBlue, Absent };

bool rule_fixes(Rule r);                 // Force or Known
bool rule_fixes_colour(Rule r, Colour c);  // fixed to exactly c
bool rule_original(Rule r);              // Keep or Known: original colour survives
const char* rule_name(Rule r);
Rule rule_from_name(const std::string& name);

// A reconstruction search ran out of candidates without certifying any.
class search_exhausted_error : public error {
public:
  using error::error;
};

// Linear size expression base + coeff*n, e.g. "n-3".
struct SizeExpr {
  int base = 0;
  int coeff = 0;
  int eval(int n) const { return base + coeff * n; }
  std::string str() const;
  static SizeExpr constant(int k) { return {k, 0}; }
  static SizeExpr linear(int coeff, int base) { return {base, coeff}; }
  bool operator==(const SizeExpr&) const = default;
};

// Explicit bipartite colour matrix for one class pair; entries Red/Blue/Keep.
struct MixedMatrix {
  int rows = 0, cols = 0;
  std::vector<Rule> cells;  // row-major
  Rule at(int r, int c) const { return cells[static_cast<std::size_t>(r * cols + c)]; }
  Rule& at(int r, int c) { return cells[static_cast<std::size_t>(r * cols + c)]; }
};

struct PairRule {
  Rule rule = Rule::Keep;
  std::optional<MixedMatrix> mixed;  // present iff the pair is Mixed
  bool is_mixed() const { return mixed.has_value(); }
};

// Class-level recolouring rule set. The implicit Outside class keeps all of
// its internal edges; boundary rules give each class's edges to Outside.
struct GadgetSpec {
  std::string name;
  std::vector<std::string> class_names;
  std::vector<SizeExpr> sizes;
  std::vector<Rule> internal;
  std::vector<Rule> boundary;
  std::vector<PairRule> pairs;  // upper-triangular, index via pair_index

  int class_count() const { return static_cast<int>(class_names.size()); }
  int class_index(std::string_view name) const;  // -1 when absent
  std::size_t pair_index(int a, int b) const;
  const PairRule& pair(int a, int b) const { return pairs[pair_index(a, b)]; }
  PairRule& pair(int a, int b) { return pairs[pair_index(a, b)]; }

  void init(std::vector<std::pair<std::string, SizeExpr>> classes);
  nlohmann::json to_json() const;
  static GadgetSpec from_json(const nlohmann::json& j);
};

// Distribution of a monochromatic clique over the gadget classes; `outside`
// counts vertices off the gadget.
struct Profile {
  std::vector<int> counts;
  int outside = 0;
  int total() const;
};

// Named predicate deciding whether a feasible profile realises one of the
// argument's allowed outcomes.
struct ConsequenceClass {
  std::string name;
  std::function<bool(const Profile&, Colour, const GadgetSpec&, int)> predicate;
};

struct CaseRow {
  Profile profile;
  Colour colour = Colour::Red;
  std::string conclusion;  // empty = violation
};

struct CaseReport {
  long long profiles_total = 0;     // distributions, colour-agnostic
  long long profiles_feasible = 0;  // (profile, colour) pairs that are feasible
  std::vector<CaseRow> rows;        // feasible rows
  std::vector<CaseRow> violations;
  std::vector<std::pair<std::string, bool>> checks;  // gadget-specific extras
  bool passes() const;
  nlohmann::json to_json() const;
};

// Apply the rules to a concrete colouring. `placement` maps class names to
// vertex sets; Outside is everything unplaced.
Colouring apply_gadget(const Colouring& c, const GadgetSpec& spec,
                       const std::map<std::string, VertexSet>& placement, int n);

// Mechanised case analysis: enumerate all profiles of a monochromatic clique
// of `clique_size`, keep those feasible under the Force rules, and demand
// every one satisfies some consequence class.
CaseReport analyze_gadget_cases(const GadgetSpec& spec, int n, int clique_size,
                                const std::vector<ConsequenceClass>& conclusions);

// Number of capped compositions counted by analyze_gadget_cases, in closed
// form (inclusion-exclusion over class caps).
long long capped_composition_count(const std::vector<int>& caps, int outside_cap, int total);

// Feasibility of one (profile, colour) pair under a spec, exposed for tests.
bool profile_feasible(const GadgetSpec& spec, int n, const Profile& profile, Colour colour);

// The searched stability gadget: class structure fixed, the 36 inter-class
// pair rules found by constrained exhaustive search, certified before return.
GadgetSpec lemma1_gadget_search(int n);

enum class T1Variant : std::uint8_t { Disjoint, Intersecting };

// Gadgets transcribed from the written construction steps. theorem1_final
// honours `variant`; n=4 intersecting uses the special two-edge rule.
GadgetSpec builtin_gadget(const std::string& name, int n,
                          std::optional<T1Variant> variant = std::nullopt);

// Gadgets whose drawings are reconstructed by exhaustive search over the
// small instance, certified before return.
GadgetSpec search_gadget(const std::string& name);

// Standard consequence classes for a named gadget.
std::vector<ConsequenceClass> gadget_conclusions(const std::string& name, const GadgetSpec& spec,
                                                 int n);

// Full certification: case analysis plus any gadget-specific checks.
CaseReport certify_gadget(const std::string& name, const GadgetSpec& spec, int n);

struct ScenarioCheck {
  std::string invocation;
  std::string inequality;
  long long lhs = 0, rhs = 0;
  bool holds = false;
};

struct ScenarioReport {
  int n = 0;
  std::vector<ScenarioCheck> checks;
  bool all_hold() const;
  nlohmann::json to_json() const;
};

// Instantiates the size preconditions of every stability-lemma invocation in
// the downstream arguments and checks each inequality numerically.
ScenarioReport scenario_arithmetic(int n);

}  // namespace ramsey
