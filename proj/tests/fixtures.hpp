#pragma once

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "fairchk/fairchk.hpp"

namespace fixtures {

using fairchk::Vertex;
using Ids = std::vector<Vertex>;
using Components = std::vector<Ids>;

// 3-cycle 0 -> 1 -> 2 -> 0
inline fairchk::Model f1() { return fairchk::parse_model("graph 3\ne 0 1\ne 1 2\ne 2 0\n"); }

// two 2-cycles linked by 1 -> 2
inline fairchk::Model f2() { return fairchk::parse_model("graph 4\ne 0 1\ne 1 0\ne 1 2\ne 2 3\ne 3 2\n"); }

// MDP with random vertex 1
inline fairchk::Model f3() { return fairchk::parse_model("mdp 3\ne 0 1\ne 1 0\ne 1 2\ne 2 2\nrandom 1\n"); }

inline fairchk::StreettPairs pairs(const std::string& text, std::size_t n) { return fairchk::parse_pairs(text, n); }

inline Ids all_vertices(std::size_t n) {
  Ids ids(n);
  for (std::size_t v = 0; v < n; ++v) ids[v] = static_cast<Vertex>(v);
  return ids;
}

// Random instance parameters shared by the property tests.
struct Shape {
  std::size_t n, m, k;
};

inline Shape small_shape(std::uint64_t seed, std::size_t max_n = 10, std::size_t max_m = 30) {
  fairchk::generate::Rng rng(seed * 2654435761ULL + 17);
  std::size_t n = 1 + rng.below(max_n);
  std::size_t hi = std::min(max_m, n * n);
  std::size_t m = n + rng.below(hi - n + 1);
  return {n, m, rng.below(4)};
}

using Backends = ::testing::Types<fairchk::BitsetBackend, fairchk::ObddBackend>;

}  // namespace fixtures
