#include "fixtures.hpp"

using namespace fairchk;
using namespace fixtures;

template <class Backend>
class Reach : public ::testing::Test {};
TYPED_TEST_SUITE(Reach, Backends);

namespace {

Ids random_subset(generate::Rng& rng, std::size_t n, std::uint64_t num = 1, std::uint64_t den = 2) {
  Ids s;
  for (Vertex v = 0; v < n; ++v)
    if (rng.chance(num, den)) s.push_back(v);
  return s;
}

Ids intersect(const Ids& a, const Ids& b) {
  Ids out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TYPED_TEST(Reach, BackwardAndForwardOnCycle) {
  auto g = f1();
  SymbolicManager<TypeParam> mgr(g);
  EXPECT_EQ(mgr.to_ids(reach_backward(mgr, mgr.universe(), mgr.from_ids({1}))), (Ids{0, 1, 2}));
  EXPECT_EQ(mgr.to_ids(reach_forward(mgr, mgr.universe(), mgr.from_ids({1}))), (Ids{0, 1, 2}));
  EXPECT_EQ(mgr.to_ids(reach_backward(mgr, mgr.from_ids({0, 1}), mgr.from_ids({1}))), (Ids{0, 1}));
  EXPECT_EQ(mgr.to_ids(reach_forward(mgr, mgr.from_ids({0, 1}), mgr.from_ids({1}))), (Ids{1}));
}

TYPED_TEST(Reach, LinkedCycles) {
  auto g = f2();
  SymbolicManager<TypeParam> mgr(g);
  EXPECT_EQ(mgr.to_ids(reach_backward(mgr, mgr.universe(), mgr.from_ids({3}))), (Ids{0, 1, 2, 3}));
  EXPECT_EQ(mgr.to_ids(reach_forward(mgr, mgr.universe(), mgr.from_ids({3}))), (Ids{2, 3}));
}

TYPED_TEST(Reach, EmptyTarget) {
  auto g = f2();
  SymbolicManager<TypeParam> mgr(g);
  EXPECT_TRUE(mgr.is_empty(reach_backward(mgr, mgr.universe(), mgr.empty())));
  EXPECT_EQ(mgr.snapshot_counters().pre_ops, 0u);
  EXPECT_TRUE(mgr.is_empty(random_attractor(mgr, mgr.universe(), mgr.empty())));
}

TYPED_TEST(Reach, AttractorInGraphIsBackwardClosureOfForcedVertices) {
  // In a graph every vertex belongs to player 1; in the 3-cycle each vertex
  // has its only successor in the growing attractor.
  auto g = f1();
  SymbolicManager<TypeParam> mgr(g);
  EXPECT_EQ(mgr.to_ids(random_attractor(mgr, mgr.universe(), mgr.from_ids({1}))), (Ids{0, 1, 2}));
}

TYPED_TEST(Reach, AttractorInMdp) {
  auto g = f3();
  SymbolicManager<TypeParam> mgr(g);
  EXPECT_EQ(mgr.to_ids(random_attractor(mgr, mgr.universe(), mgr.from_ids({2}))), (Ids{0, 1, 2}));
  EXPECT_EQ(mgr.to_ids(random_attractor(mgr, mgr.from_ids({0, 1}), mgr.from_ids({0}))), (Ids{0, 1}));
}

TYPED_TEST(Reach, AttractorPreconditionChecked) {
  auto g = f3();
  SymbolicManager<TypeParam> mgr(g);
  auto before = mgr.snapshot_counters();
  EXPECT_THROW(random_attractor(mgr, mgr.from_ids({0, 1}), mgr.from_ids({0}), true), UsageError);
  EXPECT_EQ(mgr.snapshot_counters(), before);
  EXPECT_NO_THROW(random_attractor(mgr, mgr.from_ids({0, 1}), mgr.from_ids({1}), true));
}

TYPED_TEST(Reach, AlmostSureReachExamples) {
  auto g = f3();
  SymbolicManager<TypeParam> mgr(g);
  EXPECT_EQ(mgr.to_ids(almost_sure_reach(mgr, mgr.from_ids({2}))), (Ids{0, 1, 2}));
  EXPECT_EQ(mgr.to_ids(almost_sure_reach(mgr, mgr.from_ids({0}))), (Ids{0}));
  EXPECT_TRUE(mgr.is_empty(almost_sure_reach(mgr, mgr.empty())));
}

TYPED_TEST(Reach, AgreesWithOracle) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto shape = small_shape(seed, 16, 60);
    auto g = generate::random_mdp(shape.n, shape.m, 0.3, seed);
    oracle::Adjacency adj(g);
    SymbolicManager<TypeParam> mgr(g);
    generate::Rng rng(seed ^ 77);
    auto domain = random_subset(rng, g.n(), 3, 4);
    auto target = intersect(random_subset(rng, g.n(), 1, 4), domain);
    auto dm = oracle::to_mask(g.n(), domain), tm = oracle::to_mask(g.n(), target);
    auto sd = mgr.from_ids(domain), st = mgr.from_ids(target);

    auto before = mgr.snapshot_counters();
    auto back = mgr.to_ids(reach_backward(mgr, sd, st));
    EXPECT_EQ(back, oracle::to_list(oracle::backward_reach(adj, dm, tm))) << "seed " << seed;
    EXPECT_LE((mgr.snapshot_counters() - before).pre_ops, back.size() - target.size() + 1);

    before = mgr.snapshot_counters();
    auto attr = mgr.to_ids(random_attractor(mgr, sd, st));
    EXPECT_EQ(attr, oracle::to_list(oracle::attractor(adj, dm, tm))) << "seed " << seed;
    EXPECT_LE((mgr.snapshot_counters() - before).cpre_ops, attr.size() - target.size() + 1);

    EXPECT_EQ(mgr.to_ids(almost_sure_reach(mgr, st)), oracle::explicit_almost_sure_reach(g, target)) << "seed " << seed;
  }
}

TYPED_TEST(Reach, ForwardAgreesWithReversedBackward) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto shape = small_shape(seed, 16, 60);
    auto g = generate::random_graph(shape.n, shape.m, seed);
    std::vector<Edge> reversed;
    for (auto [u, v] : g.edges()) reversed.emplace_back(v, u);
    std::sort(reversed.begin(), reversed.end());
    // Reversal can leave sinks; add self-loops to keep the model valid.
    std::vector<bool> has_out(g.n(), false);
    for (auto [u, v] : reversed) has_out[u] = true;
    for (Vertex v = 0; v < g.n(); ++v)
      if (!has_out[v] && !std::binary_search(reversed.begin(), reversed.end(), Edge{v, v})) reversed.emplace_back(v, v);
    std::sort(reversed.begin(), reversed.end());
    auto r = Model::build(ModelKind::graph, g.n(), reversed);

    SymbolicManager<TypeParam> a(g), b(r);
    generate::Rng rng(seed);
    auto source = random_subset(rng, g.n(), 1, 5);
    auto forward = a.to_ids(reach_forward(a, a.universe(), a.from_ids(source)));
    auto backward = b.to_ids(reach_backward(b, b.universe(), b.from_ids(source)));
    EXPECT_EQ(forward, backward) << "seed " << seed;
  }
}
