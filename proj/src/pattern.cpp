#include "ramsey/pattern.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ramsey/graph.hpp"

namespace ramsey {

namespace {

void validate(const std::vector<int>& sizes) {
  if (sizes.empty()) throw error("pattern must have at least one clique");
  for (int s : sizes) {
    if (s < 2) throw error("pattern clique sizes must be at least 2");
    if (s > kMaxVertices) throw error("pattern clique size exceeds 64");
  }
  if (!std::is_sorted(sizes.rbegin(), sizes.rend()))
    throw error("pattern sizes must be non-increasing");
}

}  // namespace

Pattern::Pattern(std::initializer_list<int> s) : sizes(s) {
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  validate(sizes);
}

Pattern::Pattern(std::vector<int> s) : sizes(std::move(s)) {
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  validate(sizes);
}

int Pattern::total_vertices() const {
  return std::accumulate(sizes.begin(), sizes.end(), 0);
}

Pattern Pattern::parse(std::string_view text) {
  std::vector<int> sizes;
  std::size_t i = 0;
  auto read_int = [&]() -> int {
    std::size_t start = i;
    long value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      value = value * 10 + (text[i] - '0');
      if (value > 1000) throw parse_error("number too large in pattern", start);
      ++i;
    }
    if (i == start) throw parse_error("expected a number in pattern", i);
    return static_cast<int>(value);
  };

  while (true) {
    int mult = 1;
    if (i < text.size() && text[i] >= '0' && text[i] <= '9') mult = read_int();
    if (i >= text.size() || (text[i] != 'K' && text[i] != 'k'))
      throw parse_error("expected 'K' in pattern term", i);
    ++i;
    int size = read_int();
    if (mult < 1) throw parse_error("multiplier must be positive", i);
    for (int t = 0; t < mult; ++t) sizes.push_back(size);
    if (i == text.size()) break;
    if (text[i] != '+') throw parse_error("expected '+' between pattern terms", i);
    ++i;
  }
  return Pattern(std::move(sizes));
}

std::string Pattern::format() const {
  std::string out;
  std::size_t i = 0;
  while (i < sizes.size()) {
    std::size_t j = i;
    while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += 'K';
    out += std::to_string(sizes[i]);
    i = j;
  }
  return out;
}

}  // namespace ramsey
