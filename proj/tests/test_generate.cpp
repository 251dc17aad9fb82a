#include "fixtures.hpp"

#include <set>

using namespace fairchk;
using namespace fixtures;

TEST(Generate, RngIsDeterministicAndBounded) {
  generate::Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    auto x = a.below(7);
    EXPECT_EQ(x, b.below(7));
    EXPECT_LT(x, 7u);
  }
  EXPECT_THROW(a.below(0), UsageError);
}

TEST(Generate, RandomGraphShape) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto shape = small_shape(seed, 30, 300);
    auto g = generate::random_graph(shape.n, shape.m, seed);
    EXPECT_EQ(g.n(), shape.n);
    EXPECT_EQ(g.m(), shape.m);
    EXPECT_EQ(g, generate::random_graph(shape.n, shape.m, seed));
  }
  EXPECT_EQ(generate::random_graph(5, 25, 1).m(), 25u);
}

TEST(Generate, RandomGraphRejectsImpossibleShapes) {
  EXPECT_THROW(generate::random_graph(0, 0, 1), ValidationError);
  EXPECT_THROW(generate::random_graph(5, 4, 1), ValidationError);
  EXPECT_THROW(generate::random_graph(3, 10, 1), ValidationError);
  EXPECT_THROW(generate::random_mdp(3, 5, 1.5, 1), ValidationError);
}

TEST(Generate, RandomMdpFraction) {
  for (double f : {0.0, 0.1, 0.2, 0.5, 1.0}) {
    auto g = generate::random_mdp(20, 60, f, 3);
    EXPECT_EQ(g.kind(), ModelKind::mdp);
    EXPECT_EQ(g.random_vertices().size(), static_cast<std::size_t>(f * 20 + 1e-9));
  }
}

TEST(Generate, ChainOfCycles) {
  auto g = generate::chain_of_cycles(3, 4);
  EXPECT_EQ(g.n(), 12u);
  EXPECT_EQ(g.m(), 3u * 4 + 2);
  oracle::Adjacency adj(g);
  auto sccs = oracle::tarjan_scc(adj, oracle::full_mask(12));
  EXPECT_EQ(sccs, (Components{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}}));
  auto s = g.successors(3);
  EXPECT_EQ(Ids(s.begin(), s.end()), (Ids{0, 4}));

  auto b = generate::chain_of_cycles(2, 3, true);
  EXPECT_EQ(b.m(), 2u * 6 + 1);
  EXPECT_EQ(generate::chain_of_cycles(1, 1).m(), 1u);
  EXPECT_EQ(generate::chain_of_cycles(1, 2, true).m(), 2u);
}

TEST(Generate, ChainShape) {
  EXPECT_EQ(generate::chain_shape(128), (std::pair<std::size_t, std::size_t>{8, 16}));
  EXPECT_EQ(generate::chain_shape(4096), (std::pair<std::size_t, std::size_t>{64, 64}));
  EXPECT_EQ(generate::chain_shape(1), (std::pair<std::size_t, std::size_t>{1, 1}));
}

TEST(Generate, Grid) {
  auto g = generate::grid(3, 4);
  EXPECT_EQ(g.n(), 12u);
  EXPECT_EQ(g.m(), 24u);
  oracle::Adjacency adj(g);
  EXPECT_EQ(oracle::tarjan_scc(adj, oracle::full_mask(12)).size(), 1u);
}

TEST(Generate, RandomPairs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto tp = generate::random_pairs(40, 3, seed);
    ASSERT_EQ(tp.k(), 3u);
    for (const auto& p : tp.pairs) {
      EXPECT_LE(p.lower.size(), 10u);
      EXPECT_LE(p.upper.size(), 10u);
      EXPECT_TRUE(std::is_sorted(p.lower.begin(), p.lower.end()));
      EXPECT_TRUE(std::is_sorted(p.upper.begin(), p.upper.end()));
    }
    EXPECT_EQ(tp, generate::random_pairs(40, 3, seed));
  }
}

TEST(Generate, ChainPairs) {
  auto per_cycle = generate::chain_pairs(2, 3, generate::ChainPairs::per_cycle);
  ASSERT_EQ(per_cycle.k(), 2u);
  EXPECT_EQ(per_cycle.pairs[1].lower, (Ids{3}));
  EXPECT_TRUE(per_cycle.pairs[1].upper.empty());

  auto cascade = generate::chain_pairs(2, 3, generate::ChainPairs::cascade);
  EXPECT_EQ(cascade.k(), 6u);
  // Every cycle is dismantled vertex by vertex: nothing wins.
  auto g = generate::chain_of_cycles(2, 3);
  EXPECT_TRUE(oracle::explicit_streett_graph(g, cascade).empty());
  EXPECT_TRUE(oracle::explicit_streett_graph(g, per_cycle).empty());
}
