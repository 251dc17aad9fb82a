#include "fixtures.hpp"

using namespace fairchk;
using namespace fixtures;

template <class Backend>
class Symbolic : public ::testing::Test {};
TYPED_TEST_SUITE(Symbolic, Backends);

namespace {

Ids random_subset(generate::Rng& rng, std::size_t n) {
  Ids s;
  for (Vertex v = 0; v < n; ++v)
    if (rng.chance(1, 2)) s.push_back(v);
  return s;
}

Ids explicit_pre(const Model& g, const Ids& z) {
  Ids out;
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Vertex w : g.successors(v))
      if (std::binary_search(z.begin(), z.end(), w)) {
        out.push_back(v);
        break;
      }
  }
  return out;
}

Ids explicit_post(const Model& g, const Ids& z) {
  Ids out;
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Vertex u : g.predecessors(v))
      if (std::binary_search(z.begin(), z.end(), u)) {
        out.push_back(v);
        break;
      }
  }
  return out;
}

bool member(const Ids& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

}  // namespace

TYPED_TEST(Symbolic, PreAndPostOnCycle) {
  auto g = f1();
  SymbolicManager<TypeParam> mgr(g);
  EXPECT_EQ(mgr.to_ids(mgr.pre(mgr.from_ids({1}))), (Ids{0}));
  EXPECT_EQ(mgr.to_ids(mgr.post(mgr.from_ids({1}))), (Ids{2}));
  auto c = mgr.snapshot_counters();
  EXPECT_EQ(c.pre_ops, 1u);
  EXPECT_EQ(c.post_ops, 1u);
  EXPECT_EQ(c.headline(), 2u);
}

TYPED_TEST(Symbolic, CpreRandomExample) {
  auto g = f3();
  SymbolicManager<TypeParam> mgr(g);
  EXPECT_EQ(mgr.to_ids(mgr.cpre_random(mgr.from_ids({2}))), (Ids{1, 2}));
  auto c = mgr.snapshot_counters();
  EXPECT_EQ(c.cpre_ops, 1u);
  EXPECT_EQ(c.cpre_expanded_pre, 2u);
  EXPECT_EQ(c.cpre_expanded_set, 3u);
  EXPECT_EQ(c.headline(), 0u);
  EXPECT_EQ(c.set_ops, 0u);
}

TYPED_TEST(Symbolic, ConstantsAndPartition) {
  auto g = f3();
  SymbolicManager<TypeParam> mgr(g);
  EXPECT_EQ(mgr.to_ids(mgr.universe()), (Ids{0, 1, 2}));
  EXPECT_EQ(mgr.to_ids(mgr.random_vertices()), (Ids{1}));
  EXPECT_EQ(mgr.to_ids(mgr.player1_vertices()), (Ids{0, 2}));
  EXPECT_TRUE(mgr.is_empty(mgr.empty()));
  EXPECT_EQ(mgr.to_ids(mgr.singleton(2)), (Ids{2}));
  EXPECT_EQ(mgr.snapshot_counters(), StepCounters{});
}

TYPED_TEST(Symbolic, OperationsMatchDefinitions) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto shape = small_shape(seed, 40, 200);
    auto g = generate::random_mdp(shape.n, shape.m, 0.3, seed);
    SymbolicManager<TypeParam> mgr(g);
    generate::Rng rng(seed + 1);
    auto a = random_subset(rng, g.n()), b = random_subset(rng, g.n()), d = random_subset(rng, g.n());
    auto sa = mgr.from_ids(a), sb = mgr.from_ids(b), sd = mgr.from_ids(d);

    EXPECT_EQ(mgr.to_ids(mgr.pre(sa)), explicit_pre(g, a));
    EXPECT_EQ(mgr.to_ids(mgr.post(sa)), explicit_post(g, a));

    Ids uni, inter, diff, comp;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    for (Vertex v = 0; v < g.n(); ++v)
      if (!member(a, v)) comp.push_back(v);
    EXPECT_EQ(mgr.to_ids(mgr.unite(sa, sb)), uni);
    EXPECT_EQ(mgr.to_ids(mgr.intersect(sa, sb)), inter);
    EXPECT_EQ(mgr.to_ids(mgr.minus(sa, sb)), diff);
    EXPECT_EQ(mgr.to_ids(mgr.complement(sa)), comp);
    EXPECT_EQ(mgr.cardinality(sa), a.size());
    EXPECT_EQ(mgr.is_empty(sa), a.empty());
    EXPECT_EQ(mgr.equal(sa, sb), a == b);
    EXPECT_TRUE(mgr.equal(mgr.unite(sa, sb), mgr.from_ids(uni)));
    if (!a.empty()) {
      EXPECT_EQ(mgr.pick(sa), a.front());
    }
    EXPECT_EQ(mgr.enumerate(sa), a);

    // Within a domain the target is a subset of it.
    Ids ad;
    std::set_intersection(a.begin(), a.end(), d.begin(), d.end(), std::back_inserter(ad));
    Ids cpre, cpre_in;
    for (Vertex v = 0; v < g.n(); ++v) {
      bool some = false, all = true, some_in = false, all_in = true;
      for (Vertex w : g.successors(v)) {
        some |= member(a, w);
        all &= member(a, w);
        if (member(d, w)) {
          some_in |= member(ad, w);
          all_in &= member(ad, w);
        }
      }
      if (g.is_random(v) ? some : all) cpre.push_back(v);
      if (member(d, v) && (g.is_random(v) ? some_in : (some_in && all_in))) cpre_in.push_back(v);
    }
    EXPECT_EQ(mgr.to_ids(mgr.cpre_random(sa)), cpre) << "seed " << seed;
    EXPECT_EQ(mgr.to_ids(mgr.cpre_random(mgr.from_ids(ad), sd)), cpre_in) << "seed " << seed;
  }
}

TYPED_TEST(Symbolic, CountersChargeEachOperationOnce) {
  auto g = f2();
  SymbolicManager<TypeParam> mgr(g);
  auto a = mgr.from_ids({0, 1}), b = mgr.from_ids({1, 2});
  mgr.unite(a, b);
  mgr.intersect(a, b);
  mgr.minus(a, b);
  mgr.complement(a);
  mgr.cardinality(a);
  mgr.pick(a);
  mgr.enumerate(b);
  mgr.cpre_random(a, b);
  mgr.is_empty(a);
  mgr.equal(a, b);
  mgr.to_ids(a);
  auto c = mgr.snapshot_counters();
  EXPECT_EQ(c.set_ops, 4u);
  EXPECT_EQ(c.cardinality_ops, 1u);
  EXPECT_EQ(c.pick_ops, 3u);
  EXPECT_EQ(c.cpre_ops, 1u);
  EXPECT_EQ(c.cpre_expanded_pre, 2u);
  EXPECT_EQ(c.cpre_expanded_set, 4u);
  EXPECT_EQ(c.headline(), 0u);
  EXPECT_EQ(c.headline_with_cpre(), 2u);
  auto d = mgr.snapshot_counters() - c;
  EXPECT_EQ(d, StepCounters{});
}

TYPED_TEST(Symbolic, MisuseIsRejected) {
  auto g = f1();
  SymbolicManager<TypeParam> mgr(g), other(g);
  EXPECT_THROW(mgr.pick(mgr.empty()), UsageError);
  EXPECT_THROW(mgr.singleton(3), UsageError);
  EXPECT_THROW(mgr.from_ids({0, 7}), UsageError);
  auto foreign = other.from_ids({0});
  EXPECT_FALSE(mgr.owns(foreign));
  EXPECT_THROW(mgr.pre(foreign), UsageError);
  EXPECT_THROW(mgr.unite(mgr.universe(), foreign), UsageError);
  EXPECT_THROW(mgr.to_ids(VertexSet<TypeParam>{}), UsageError);
}

TEST(SymbolicBackends, LargeUniverseAgrees) {
  auto g = generate::random_graph(1000, 5000, 7);
  SymbolicManager<BitsetBackend> bits(g);
  SymbolicManager<ObddBackend> bdd(g);
  generate::Rng rng(3);
  auto z = random_subset(rng, g.n());
  EXPECT_EQ(bits.to_ids(bits.pre(bits.from_ids(z))), bdd.to_ids(bdd.pre(bdd.from_ids(z))));
  EXPECT_EQ(bits.to_ids(bits.post(bits.from_ids(z))), bdd.to_ids(bdd.post(bdd.from_ids(z))));
  EXPECT_EQ(bits.cardinality(bits.from_ids(z)), bdd.cardinality(bdd.from_ids(z)));
  EXPECT_EQ(bdd.cardinality(bdd.universe()), 1000u);
}

TEST(SymbolicBackends, SingleVertex) {
  auto g = parse_model("graph 1\ne 0 0\n");
  SymbolicManager<ObddBackend> mgr(g);
  EXPECT_EQ(mgr.to_ids(mgr.universe()), (Ids{0}));
  EXPECT_EQ(mgr.to_ids(mgr.pre(mgr.universe())), (Ids{0}));
  EXPECT_EQ(mgr.cardinality(mgr.universe()), 1u);
}
