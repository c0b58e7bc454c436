// Recolouring gadgets transcribed from the written construction steps; each
// is a class-level rule set. KnownRed/KnownBlue mark edges the surrounding
// argument pins to a colour without the gadget recolouring them.

#include "ramsey/gadget.hpp"

namespace ramsey {

namespace {

GadgetSpec make_lemma3_stage1(int n) {
  if (n < 4) throw error("lemma3_stage1 needs n >= 4");
  GadgetSpec spec;
  spec.name = "lemma3_stage1";
  spec.init({{"a", SizeExpr::constant(1)},
             {"b", SizeExpr::constant(1)},
             {"V_rest", SizeExpr::linear(1, -2)}});
  int a = spec.class_index("a"), b = spec.class_index("b"), rest = spec.class_index("V_rest");
  spec.internal[static_cast<std::size_t>(rest)] = Rule::ForceBlue;
  spec.boundary[static_cast<std::size_t>(rest)] = Rule::ForceRed;
  spec.pair(a, b).rule = Rule::KnownRed;  // the one red edge kept inside the clique
  spec.pair(a, rest).rule = Rule::ForceBlue;
  spec.pair(b, rest).rule = Rule::ForceBlue;
  return spec;
}

GadgetSpec make_lemma3_stage2(int n) {
  if (n < 4) throw error("lemma3_stage2 needs n >= 4");
  GadgetSpec spec;
  spec.name = "lemma3_stage2";
  spec.init({{"a", SizeExpr::constant(1)},
             {"b", SizeExpr::constant(1)},
             {"c", SizeExpr::constant(1)},
             {"d", SizeExpr::constant(1)},
             {"W_core", SizeExpr::linear(1, -4)},
             {"V_rest", SizeExpr::linear(1, -2)}});
  int a = spec.class_index("a"), b = spec.class_index("b"), c = spec.class_index("c"),
      d = spec.class_index("d"), w = spec.class_index("W_core"), rest = spec.class_index("V_rest");

  spec.internal[static_cast<std::size_t>(w)] = Rule::ForceBlue;
  spec.internal[static_cast<std::size_t>(rest)] = Rule::KnownRed;  // first clique untouched inside

  spec.boundary[static_cast<std::size_t>(a)] = Rule::ForceRed;
  spec.boundary[static_cast<std::size_t>(b)] = Rule::ForceRed;
  spec.boundary[static_cast<std::size_t>(d)] = Rule::ForceRed;
  spec.boundary[static_cast<std::size_t>(c)] = Rule::Keep;
  spec.boundary[static_cast<std::size_t>(w)] = Rule::ForceRed;
  spec.boundary[static_cast<std::size_t>(rest)] = Rule::Keep;

  // inside {a,b,c,d}: all blue except ac, which stays red
  spec.pair(a, b).rule = Rule::ForceBlue;
  spec.pair(a, c).rule = Rule::KnownRed;
  spec.pair(a, d).rule = Rule::ForceBlue;
  spec.pair(b, c).rule = Rule::ForceBlue;
  spec.pair(b, d).rule = Rule::ForceBlue;
  spec.pair(c, d).rule = Rule::ForceBlue;

  spec.pair(w, a).rule = Rule::ForceBlue;
  spec.pair(w, b).rule = Rule::ForceBlue;
  spec.pair(w, c).rule = Rule::ForceBlue;
  spec.pair(w, d).rule = Rule::ForceBlue;
  spec.pair(w, rest).rule = Rule::ForceRed;

  spec.pair(a, rest).rule = Rule::ForceBlue;
  spec.pair(b, rest).rule = Rule::ForceBlue;
  spec.pair(c, rest).rule = Rule::ForceRed;
  spec.pair(d, rest).rule = Rule::ForceRed;
  return spec;
}

MixedMatrix alternating_matrix(int rows, int cols) {
  MixedMatrix mm;
  mm.rows = rows;
  mm.cols = cols;
  mm.cells.assign(static_cast<std::size_t>(rows * cols), Rule::Keep);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      mm.at(r, c) = ((r + c) % 2 == 0) ? Rule::ForceRed : Rule::ForceBlue;
  return mm;
}

GadgetSpec make_theorem1_final(int n, T1Variant variant) {
  if (n < 4) throw error("theorem1_final needs n >= 4");
  bool intersecting = variant == T1Variant::Intersecting;
  GadgetSpec spec;
  spec.name = "theorem1_final";
  spec.init({{"W_R", intersecting ? SizeExpr::linear(1, -3) : SizeExpr::linear(1, -2)},
             {"W_B", SizeExpr::linear(1, -2)},
             {"X_R", SizeExpr::constant(2)},
             {"X_B", SizeExpr::constant(2)}});
  int wr = spec.class_index("W_R"), wb = spec.class_index("W_B"), xr = spec.class_index("X_R"),
      xb = spec.class_index("X_B");

  spec.internal[static_cast<std::size_t>(wr)] = Rule::ForceBlue;
  spec.internal[static_cast<std::size_t>(wb)] = Rule::ForceRed;
  spec.internal[static_cast<std::size_t>(xr)] = Rule::KnownRed;   // leftover red-clique edge
  spec.internal[static_cast<std::size_t>(xb)] = Rule::KnownBlue;  // leftover blue-clique edge

  spec.boundary[static_cast<std::size_t>(wr)] = Rule::ForceRed;
  spec.boundary[static_cast<std::size_t>(wb)] = Rule::ForceBlue;

  spec.pair(wr, xr).rule = Rule::ForceBlue;
  spec.pair(wr, xb).rule = Rule::ForceRed;
  spec.pair(wb, xb).rule = Rule::ForceRed;
  spec.pair(wb, xr).rule = Rule::ForceBlue;
  // X_R-X_B stays Keep: those edges are never recoloured

  int rows = spec.sizes[static_cast<std::size_t>(wr)].eval(n);
  int cols = spec.sizes[static_cast<std::size_t>(wb)].eval(n);
  MixedMatrix mm;
  if (rows == 1) {
    // the special two-edge rule: one red edge, one blue edge
    mm.rows = 1;
    mm.cols = cols;
    mm.cells = {Rule::ForceRed, Rule::ForceBlue};
  } else {
    mm = alternating_matrix(rows, cols);
  }
  spec.pair(wr, wb) = PairRule{Rule::Keep, std::move(mm)};
  return spec;
}

GadgetSpec make_t2_first(int n) {
  if (n != 3) throw error("t2_first is fixed at n = 3");
  GadgetSpec spec;
  spec.name = "t2_first";
  spec.init({{"x_R", SizeExpr::constant(1)},
             {"y_R", SizeExpr::constant(1)},
             {"z_R", SizeExpr::constant(1)}});
  int x = spec.class_index("x_R"), y = spec.class_index("y_R"), z = spec.class_index("z_R");
  spec.boundary[static_cast<std::size_t>(x)] = Rule::ForceRed;
  spec.pair(x, y).rule = Rule::ForceBlue;
  spec.pair(x, z).rule = Rule::ForceBlue;
  spec.pair(y, z).rule = Rule::KnownRed;  // edge of the assumed red triangle, untouched
  return spec;
}

GadgetSpec make_t2_path(int n) {
  if (n != 3) throw error("t2_path is fixed at n = 3");
  GadgetSpec spec;
  spec.name = "t2_path";
  spec.init({{"x_R", SizeExpr::constant(1)},
             {"y_R", SizeExpr::constant(1)},
             {"z_R", SizeExpr::constant(1)},
             {"v_R", SizeExpr::constant(1)}});
  int x = spec.class_index("x_R"), y = spec.class_index("y_R"), z = spec.class_index("z_R"),
      v = spec.class_index("v_R");
  spec.boundary[static_cast<std::size_t>(y)] = Rule::ForceRed;
  spec.boundary[static_cast<std::size_t>(z)] = Rule::ForceRed;
  // red path z - x - v - y, complement blue
  spec.pair(z, x).rule = Rule::ForceRed;
  spec.pair(x, v).rule = Rule::ForceRed;
  spec.pair(v, y).rule = Rule::ForceRed;
  spec.pair(x, y).rule = Rule::ForceBlue;
  spec.pair(z, v).rule = Rule::ForceBlue;
  spec.pair(z, y).rule = Rule::ForceBlue;
  return spec;
}

}  // namespace

GadgetSpec builtin_gadget(const std::string& name, int n, std::optional<T1Variant> variant) {
  if (name == "lemma3_stage1") return make_lemma3_stage1(n);
  if (name == "lemma3_stage2") return make_lemma3_stage2(n);
  if (name == "theorem1_final")
    return make_theorem1_final(n, variant.value_or(T1Variant::Disjoint));
  if (name == "t2_first") return make_t2_first(n);
  if (name == "t2_path") return make_t2_path(n);
  throw error("unknown builtin gadget: " + name);
}

}  // namespace ramsey
