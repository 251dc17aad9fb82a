#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fairchk/errors.hpp"
#include "fairchk/model.hpp"
#include "fairchk/streett_pairs.hpp"

// Synthetic model and pair generators. Output depends only on the
// parameters and the seed, on every platform.
namespace fairchk::generate {

// mt19937_64 with a portable bounded draw (the standard distributions are
// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw UsageError("empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

// n vertices, m distinct edges, every vertex with at least one successor
// (self-loops allowed).
inline std::vector<Edge> random_edges(std::size_t n, std::size_t m, Rng& rng) {
  if (n == 0) throw ValidationError("need at least one vertex");
  if (m < n) throw ValidationError("need m >= n so that every vertex has a successor");
  if (m > n * n) throw ValidationError("m exceeds n*n possible edges");
  std::set<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace(static_cast<Vertex>(v), static_cast<Vertex>(rng.below(n)));
  if (m > n * n / 2) {
    // Dense: sample the complement instead of rejecting.
    std::vector<Edge> missing;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (!edges.count({u, v})) missing.emplace_back(u, v);
    for (std::size_t i = missing.size(); i > 1; --i) std::swap(missing[i - 1], missing[rng.below(i)]);
    missing.resize(m - edges.size());
    edges.insert(missing.begin(), missing.end());
  } else {
    while (edges.size() < m) {
      edges.emplace(static_cast<Vertex>(rng.below(n)), static_cast<Vertex>(rng.below(n)));
    }
  }
  return {edges.begin(), edges.end()};
}

inline Model random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  return Model::build(ModelKind::graph, n, random_edges(n, m, rng));
}

// A random graph whose floor(fraction * n) vertices, chosen uniformly, are random.
inline Model random_mdp(std::size_t n, std::size_t m, double fraction, std::uint64_t seed) {
  if (fraction < 0.0 || fraction > 1.0) throw ValidationError("random fraction must lie in [0, 1]");
  Rng rng(seed);
  auto edges = random_edges(n, m, rng);
  std::vector<Vertex> ids(n);
  for (std::size_t v = 0; v < n; ++v) ids[v] = static_cast<Vertex>(v);
  for (std::size_t i = n; i > 1; --i) std::swap(ids[i - 1], ids[rng.below(i)]);
  ids.resize(static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n) + 1e-9)));
  std::sort(ids.begin(), ids.end());
  return Model::build(ModelKind::mdp, n, std::move(edges), std::move(ids));
}

// `cycles` cycles of `size` vertices, cycle i holding i*size .. i*size+size-1,
// with an edge from the last vertex of cycle i to the first of cycle i+1.
// Bidirectional cycles also have every cycle edge reversed.
inline Model chain_of_cycles(std::size_t cycles, std::size_t size, bool bidirectional = false) {
  if (cycles == 0 || size == 0) throw ValidationError("chain of cycles needs cycles, size >= 1");
  std::set<Edge> edges;
  for (std::size_t c = 0; c < cycles; ++c) {
    const auto base = static_cast<Vertex>(c * size);
    for (std::size_t j = 0; j < size; ++j) {
      auto u = static_cast<Vertex>(base + j);
      auto v = static_cast<Vertex>(base + (j + 1) % size);
      edges.emplace(u, v);
      if (bidirectional) edges.emplace(v, u);
    }
    if (c + 1 < cycles) edges.emplace(static_cast<Vertex>(base + size - 1), static_cast<Vertex>(base + size));
  }
  return Model::build(ModelKind::graph, cycles * size, {edges.begin(), edges.end()});
}

// Chain of cycles with about n vertices: cycles of 2^ceil(log2(n)/2) vertices.
inline std::pair<std::size_t, std::size_t> chain_shape(std::size_t n) {
  if (n < 1) throw ValidationError("chain of cycles needs n >= 1");
  auto bits = static_cast<unsigned>(std::ceil(std::log2(static_cast<double>(n)) / 2.0 - 1e-9));
  std::size_t size = std::size_t{1} << bits;
  return {std::max<std::size_t>(1, n / size), size};
}

// rows x cols torus with edges to the right and downward neighbours.
inline Model grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw ValidationError("grid needs rows, cols >= 1");
  std::set<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto v = static_cast<Vertex>(r * cols + c);
      edges.emplace(v, static_cast<Vertex>(r * cols + (c + 1) % cols));
      edges.emplace(v, static_cast<Vertex>(((r + 1) % rows) * cols + c));
    }
  }
  return Model::build(ModelKind::graph, rows * cols, {edges.begin(), edges.end()});
}

// k pairs; each vertex joins each L_i and U_i independently with
// probability 1/5, keeping at most max(1, n/4) vertices per side.
inline StreettPairs random_pairs(std::size_t n, std::size_t k, std::uint64_t seed) {
  Rng rng(seed ^ 0x5bd1e995ULL);
  const std::size_t cap = std::max<std::size_t>(1, n / 4);
  StreettPairs tp;
  tp.pairs.resize(k);
  for (auto& p : tp.pairs) {
    for (auto* side : {&p.lower, &p.upper}) {
      for (std::size_t v = 0; v < n; ++v)
        if (rng.chance(1, 5)) side->push_back(static_cast<Vertex>(v));
      while (side->size() > cap) side->erase(side->begin() + static_cast<std::ptrdiff_t>(rng.below(side->size())));
    }
  }
  return tp;
}

enum class ChainPairs {
  per_cycle,  // (L = {first vertex of the cycle}, U = {}) for every cycle
  cascade,    // additionally (L = {c_j}, U = {c_{j-1}}) along every cycle
};

// Pairs for chain_of_cycles that make one vertex per cycle bad. In cascade
// mode removing c_{j-1} turns c_j bad, so a cycle is dismantled one vertex
// at a time.
inline StreettPairs chain_pairs(std::size_t cycles, std::size_t size, ChainPairs mode) {
  StreettPairs tp;
  for (std::size_t c = 0; c < cycles; ++c) {
    const auto base = static_cast<Vertex>(c * size);
    tp.pairs.push_back({{base}, {}});
    if (mode != ChainPairs::cascade) continue;
    for (std::size_t j = 1; j < size; ++j) {
      tp.pairs.push_back({{static_cast<Vertex>(base + j)}, {static_cast<Vertex>(base + j - 1)}});
    }
  }
  return tp;
}

}  // namespace fairchk::generate
