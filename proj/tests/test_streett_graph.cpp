#include "fixtures.hpp"

using namespace fairchk;
using namespace fixtures;

template <class Backend>
class StreettGraph : public ::testing::Test {
 protected:
  // Runs basic and improved (under several thresholds, with debug checks)
  // and requires all of them to agree before returning the winning set.
  Ids solve(const Model& g, const StreettPairs& tp) {
    RunOptions debug;
    debug.debug_invariants = true;
    Ids basic;
    {
      SymbolicManager<Backend> mgr(g);
      basic = streett_graph_basic(mgr, tp, debug).winning;
    }
    for (auto t : {Threshold::automatic(), Threshold::practical(), Threshold::fixed(1), Threshold::never()}) {
      SymbolicManager<Backend> mgr(g);
      auto options = debug;
      options.threshold = t;
      EXPECT_EQ(streett_graph_improved(mgr, tp, options).winning, basic) << "threshold " << t.to_string();
    }
    return basic;
  }
};
TYPED_TEST_SUITE(StreettGraph, Backends);

TYPED_TEST(StreettGraph, WholeCycleIsGood) {
  EXPECT_EQ(this->solve(f1(), pairs("pairs 1\nL 1 0\nU 1 2\n", 3)), (Ids{0, 1, 2}));
}

TYPED_TEST(StreettGraph, BadVertexBreaksTwoCycle) {
  auto g = parse_model("graph 2\ne 0 1\ne 1 0\n");
  EXPECT_EQ(this->solve(g, pairs("pairs 1\nL 1 0\nU 1\n", 2)), Ids{});
}

TYPED_TEST(StreettGraph, EveryoneReachesTheGoodComponent) {
  EXPECT_EQ(this->solve(f2(), pairs("pairs 1\nL 1 1\nU 1 3\n", 4)), (Ids{0, 1, 2, 3}));
}

TYPED_TEST(StreettGraph, NoPairs) { EXPECT_EQ(this->solve(f1(), pairs("pairs 0\n", 3)), (Ids{0, 1, 2})); }

TYPED_TEST(StreettGraph, LockStepPathGivesTheSameAnswer) {
  auto g = f2();
  auto tp = pairs("pairs 1\nL 1 1\nU 1 3\n", 4);
  SymbolicManager<TypeParam> a(g), b(g);
  RunOptions never;
  never.threshold = Threshold::never();
  never.debug_invariants = true;
  auto basic = streett_graph_basic(a, tp);
  auto improved = streett_graph_improved(b, tp, never);
  EXPECT_EQ(improved.winning, basic.winning);
  // Removing bad vertex 1 leaves {0} without an edge, so no lock-step search
  // is needed on this input.
  EXPECT_EQ(improved.stats.lock_step_calls, 0u);
}

TYPED_TEST(StreettGraph, LockStepSplitsAfterBadRemoval) {
  // 0 <-> 1 -> 2 <-> 3 <-> 4 with self-loops at 2 and 4, and 3 bad: the
  // remainder {2,4} of the second SCC falls apart into two good components.
  auto g = parse_model("graph 5\ne 0 1\ne 1 0\ne 1 2\ne 2 3\ne 3 2\ne 3 4\ne 4 3\ne 4 4\ne 2 2\n");
  auto tp = pairs("pairs 1\nL 1 3\nU 1\n", 5);
  EXPECT_EQ(this->solve(g, tp), (Ids{0, 1, 2, 3, 4}));
  SymbolicManager<TypeParam> mgr(g);
  RunOptions never;
  never.threshold = Threshold::never();
  auto report = streett_graph_improved(mgr, tp, never);
  EXPECT_GE(report.stats.lock_step_calls, 1u);
}

TYPED_TEST(StreettGraph, RejectsMdp) {
  auto g = f3();
  SymbolicManager<TypeParam> mgr(g);
  EXPECT_THROW(streett_graph_basic(mgr, pairs("pairs 0\n", 3)), UsageError);
  EXPECT_THROW(streett_graph_improved(mgr, pairs("pairs 0\n", 3)), UsageError);
}

TYPED_TEST(StreettGraph, ReportAccounting) {
  auto g = f2();
  SymbolicManager<TypeParam> mgr(g);
  auto report = streett_graph_basic(mgr, pairs("pairs 1\nL 1 1\nU 1 3\n", 4));
  EXPECT_EQ(report.algorithm, "streett-graph-basic");
  EXPECT_EQ(report.counters, mgr.snapshot_counters());
  EXPECT_EQ(report.steps() + report.preprocessing_steps(), report.counters.headline());
  EXPECT_GT(report.preprocessing_steps(), 0u);
  EXPECT_EQ(report.stats.invariant_checks, 0u);
}

TYPED_TEST(StreettGraph, AgreesWithOracle) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto shape = small_shape(seed);
    auto g = generate::random_graph(shape.n, shape.m, seed);
    auto tp = generate::random_pairs(shape.n, shape.k, seed);
    EXPECT_EQ(this->solve(g, tp), oracle::explicit_streett_graph(g, tp)) << "seed " << seed;
  }
}

TYPED_TEST(StreettGraph, ForwardBackwardSccsGiveTheSameAnswer) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto shape = small_shape(seed, 16, 50);
    auto g = generate::random_graph(shape.n, shape.m, seed);
    auto tp = generate::random_pairs(shape.n, shape.k, seed);
    RunOptions fb;
    fb.scc_method = SccMethod::forward_backward;
    SymbolicManager<TypeParam> a(g), b(g);
    EXPECT_EQ(streett_graph_improved(a, tp, fb).winning, streett_graph_improved(b, tp).winning);
  }
}
