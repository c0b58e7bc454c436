#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

// A clique-union target: vertex-disjoint complete graphs, given by a
// non-increasing list of clique sizes (each >= 2). "K4+K3" is {4,3},
// "K3+2K2" is {3,2,2}.
struct Pattern {
  std::vector<int> sizes;

  Pattern() = default;
  Pattern(std::initializer_list<int> s);
  explicit Pattern(std::vector<int> s);

  int total_vertices() const;
  int part_count() const { return static_cast<int>(sizes.size()); }
  int max_size() const { return sizes.empty() ? 0 : sizes.front(); }

  // Grammar: terms joined by '+', each term an optional multiplier followed
  // by 'K' and a size, e.g. "K4", "K4+K3", "K3+2K2".
  static Pattern parse(std::string_view text);
  std::string format() const;

  bool operator==(const Pattern&) const = default;
};

}  // namespace ramsey
