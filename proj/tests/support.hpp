#pragma once

// Shared helpers for the test suites: seeded random tables, permutations
// and structures.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <catch_amalgamated.hpp>

#include "dimonoid.hpp"

namespace dimonoid::testing {

  // Seed for randomized tests, set with --rng-seed.
  inline std::uint32_t seed() {
    return Catch::getSeed();
  }

  inline OpTable random_table(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    return OpTable::from_function(n, [&](std::size_t, std::size_t) { return pick(rng); });
  }

  inline Permutation random_permutation(std::size_t n, std::mt19937& rng) {
    std::vector<Element> images(n);
    std::iota(images.begin(), images.end(), Element{0});
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(std::move(images));
  }

  inline DiStructure random_structure(std::size_t n, std::mt19937& rng) {
    return DiStructure(random_table(n, rng), random_table(n, rng));
  }

  // Every permutation of {0, ..., n - 1} in lexicographic order.
  inline std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<Element> images(n);
    std::iota(images.begin(), images.end(), Element{0});
    std::vector<Permutation> out;
    do {
      out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }

  inline OpTable table(std::size_t n, std::vector<Element> entries) {
    return OpTable(n, std::move(entries));
  }

}  // namespace dimonoid::testing
