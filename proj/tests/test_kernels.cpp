#include <bit>
#include <random>

#include "doctest.h"
#include "ramsey/kernels.hpp"

using namespace ramsey::kernels;

namespace {

// naive reference, written independently of the scalar backend
std::size_t naive_find_subset(const std::vector<std::uint64_t>& masks, std::size_t count,
                              std::size_t words, const std::vector<std::uint64_t>& have) {
  for (std::size_t i = 0; i < count; ++i) {
    bool subset = true;
    for (std::size_t w = 0; w < words; ++w)
      if (masks[i * words + w] & ~have[w]) subset = false;
    if (subset) return i;
  }
  return npos;
}

ScanResult naive_min_missing(const std::vector<std::uint64_t>& masks, std::size_t count,
                             std::size_t words, const std::vector<std::uint64_t>& avoid,
                             const std::vector<std::uint64_t>& have) {
  ScanResult best;
  for (std::size_t i = 0; i < count; ++i) {
    bool dead = false;
    int missing = 0;
    for (std::size_t w = 0; w < words; ++w) {
      if (masks[i * words + w] & avoid[w]) dead = true;
      missing += std::popcount(masks[i * words + w] & ~have[w]);
    }
    if (dead) continue;
    if (missing < best.missing) {
      best = {i, missing};
    }
  }
  return best;
}

struct Case {
  std::vector<std::uint64_t> masks, avoid, have;
  std::size_t count, words;
};

Case random_case(std::mt19937_64& rng, std::size_t count, std::size_t words, int density) {
  Case c;
  c.count = count;
  c.words = words;
  auto word = [&](int shift) {
    std::uint64_t w = rng();
    for (int i = 0; i < shift; ++i) w &= rng();
    return w;
  };
  c.masks.resize(count * words);
  for (auto& m : c.masks) m = word(density);
  c.avoid.resize(words);
  c.have.resize(words);
  for (auto& w : c.avoid) w = word(2);
  for (auto& w : c.have) w = word(1);
  return c;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar backend matches the naive reference") {
    std::mt19937_64 rng(99);
    const Backend& scalar = scalar_backend();
    for (int iter = 0; iter < 400; ++iter) {
      std::uniform_int_distribution<std::size_t> pick_count(0, 40), pick_words(1, 5);
      Case c = random_case(rng, pick_count(rng), pick_words(rng), iter % 4);
      CHECK(scalar.find_subset(c.masks.data(), c.count, c.words, c.have.data()) ==
            naive_find_subset(c.masks, c.count, c.words, c.have));
      ScanResult got = scalar.min_missing(c.masks.data(), c.count, c.words, c.avoid.data(),
                                          c.have.data());
      ScanResult want = naive_min_missing(c.masks, c.count, c.words, c.avoid, c.have);
      CHECK(got.index == want.index);
      CHECK(got.missing == want.missing);
    }
  }

  TEST_CASE("all available backends agree with scalar, ties and indices included") {
    std::mt19937_64 rng(1234);
    const Backend& scalar = scalar_backend();
    auto backends = available_backends();
    CHECK(!backends.empty());
    for (const Backend* b : backends) {
      CAPTURE(b->name);
      for (int iter = 0; iter < 600; ++iter) {
        std::uniform_int_distribution<std::size_t> pick_count(0, 70), pick_words(1, 6);
        Case c = random_case(rng, pick_count(rng), pick_words(rng), iter % 4);
        CHECK(b->find_subset(c.masks.data(), c.count, c.words, c.have.data()) ==
              scalar.find_subset(c.masks.data(), c.count, c.words, c.have.data()));
        ScanResult got =
            b->min_missing(c.masks.data(), c.count, c.words, c.avoid.data(), c.have.data());
        ScanResult want =
            scalar.min_missing(c.masks.data(), c.count, c.words, c.avoid.data(), c.have.data());
        CHECK(got.index == want.index);
        CHECK(got.missing == want.missing);
      }
    }
  }

  TEST_CASE("duplicate minima resolve to the first index on every backend") {
    // four identical live placements: index 0 must win everywhere
    std::vector<std::uint64_t> masks{0b1010, 0b1010, 0b1010, 0b1010, 0b1010};
    std::vector<std::uint64_t> avoid{0}, have{0b10};
    for (const Backend* b : available_backends()) {
      CAPTURE(b->name);
      ScanResult r = b->min_missing(masks.data(), masks.size(), 1, avoid.data(), have.data());
      CHECK(r.index == 0);
      CHECK(r.missing == 1);
    }
  }

  TEST_CASE("empty scans") {
    std::vector<std::uint64_t> have{~std::uint64_t{0}};
    for (const Backend* b : available_backends()) {
      CHECK(b->find_subset(nullptr, 0, 1, have.data()) == npos);
      ScanResult r = b->min_missing(nullptr, 0, 1, have.data(), have.data());
      CHECK(r.index == npos);
      CHECK(r.missing == unbounded_missing);
    }
  }

  TEST_CASE("backend dispatch can be overridden") {
    const Backend& before = active_backend();
    set_active_backend(scalar_backend());
    CHECK(std::string(active_backend().name) == "scalar");
    set_active_backend(before);
  }
}
