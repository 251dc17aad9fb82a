#pragma once

#include <deque>
#include <string>
#include <vector>

#include "fairchk/errors.hpp"
#include "fairchk/oracle.hpp"
#include "fairchk/streett_pairs.hpp"
#include "fairchk/symbolic.hpp"

namespace fairchk {

// A candidate set S with the vertices that lost incoming (heads) and
// outgoing (tails) edges since a superset of S was last strongly connected.
template <SetBackend Backend>
struct Candidate {
  VertexSet<Backend> s, heads, tails;
};

// What the maintained candidate families must cover.
enum class CoverTarget { good_components, mecs, good_end_components };

// Debug-mode checks of the algorithm invariants against the explicit oracle.
// Reads sets through to_ids only, so step counters are not affected.
template <SetBackend Backend>
class InvariantChecker {
 public:
  using Set = VertexSet<Backend>;

  InvariantChecker(const SymbolicManager<Backend>& mgr, const StreettPairs& tp, CoverTarget target)
      : mgr_(mgr), tp_(tp), g_(mgr.model()) {
    switch (target) {
      case CoverTarget::good_components: targets_ = oracle::good_components(g_, tp_); break;
      case CoverTarget::mecs: targets_ = oracle::mecs_within(g_, oracle::full_mask(g_.n())); break;
      case CoverTarget::good_end_components: targets_ = oracle::good_end_components(g_, tp_); break;
    }
  }

  std::uint64_t checks() const { return checks_; }

  // Candidates and accepted sets are pairwise disjoint, and every maximal
  // target component lies inside one of them.
  void families(const std::deque<Candidate<Backend>>& queue, const std::vector<Set>& accepted) {
    ++checks_;
    std::vector<int> owner(g_.n(), -1);
    int id = 0;
    auto claim = [&](const Set& s) {
      for (Vertex v : mgr_.to_ids(s)) {
        if (owner[v] != -1) fail("candidate sets overlap in vertex " + std::to_string(v));
        owner[v] = id;
      }
      ++id;
    };
    for (const auto& c : queue) claim(c.s);
    for (const auto& s : accepted) claim(s);
    for (const auto& target : targets_) {
      int o = owner[target.front()];
      for (Vertex v : target) {
        if (o == -1 || owner[v] != o) {
          fail("maximal component " + describe(target) + " is not inside a single candidate");
        }
      }
    }
  }

  // Every top SCC of G[S] meets H and every bottom SCC meets T, or H and T
  // are empty and G[S] is strongly connected.
  void lock_step_start(const Set& s, const Set& heads, const Set& tails, bool need_heads = true) {
    ++checks_;
    auto sm = mask(s), hm = mask(heads), tm = mask(tails);
    for (std::size_t v = 0; v < g_.n(); ++v)
      if ((hm[v] || tm[v]) && !sm[v]) fail("start vertex " + std::to_string(v) + " outside S");
    auto sccs = oracle::tarjan_scc(g_, sm);
    if (!oracle::any(hm) && !oracle::any(tm)) {
      if (sccs.size() > 1) fail("no start vertices but G[S] is not strongly connected");
      return;
    }
    for (const auto& scc : sccs) {
      auto cm = oracle::to_mask(g_.n(), scc);
      if (need_heads && is_top(cm, sm) && !meets(scc, hm)) fail("top SCC " + describe(scc) + " misses H_S");
      if (is_bottom(cm, sm) && !meets(scc, tm)) fail("bottom SCC " + describe(scc) + " misses T_S");
    }
  }

  void lock_step_result(const Set& s, const Set& c) {
    ++checks_;
    auto sm = mask(s), cm = mask(c);
    auto sccs = oracle::tarjan_scc(g_, sm);
    auto ids = mgr_.to_ids(c);
    bool is_scc = std::find(sccs.begin(), sccs.end(), ids) != sccs.end();
    if (!is_scc || !(is_top(cm, sm) || is_bottom(cm, sm))) {
      fail("lock-step result " + describe(ids) + " is not a top or bottom SCC");
    }
  }

  // No random vertex of S has an edge leaving S.
  void closed(const Set& s) {
    ++checks_;
    if (oracle::has_random_exit(g_, mask(s))) fail("random vertex with an edge leaving " + describe(mgr_.to_ids(s)));
  }

  void accepted_component(const Set& s) {
    ++checks_;
    auto sm = mask(s);
    if (!oracle::strongly_connected(g_, sm) || !oracle::has_internal_edge(g_, sm)) {
      fail("accepted set " + describe(mgr_.to_ids(s)) + " is not a non-trivial strongly connected set");
    }
    if (oracle::any(oracle::bad(tp_, sm))) fail("accepted set " + describe(mgr_.to_ids(s)) + " has bad vertices");
  }

  void accepted_end_component(const Set& s, bool check_good) {
    ++checks_;
    auto sm = mask(s);
    if (!oracle::is_end_component(g_, sm)) fail("accepted set " + describe(mgr_.to_ids(s)) + " is not an end-component");
    if (check_good && oracle::any(oracle::bad(tp_, sm))) {
      fail("accepted set " + describe(mgr_.to_ids(s)) + " has bad vertices");
    }
  }

  // C \ kept equals Attr_R(P[S], S \ C) ∩ C. A C without internal edges is
  // skipped: its vertex has no successor in P[C] and is dropped anyway.
  void attractor_slice(const Set& s, const Set& c, const Set& kept) {
    ++checks_;
    auto sm = mask(s), cm = mask(c), km = mask(kept);
    if (!oracle::has_internal_edge(g_, cm)) return;
    auto attr = oracle::attractor(g_, sm, oracle::minus(sm, cm));
    for (std::size_t v = 0; v < g_.n(); ++v) {
      if (cm[v] && (attr[v] != !km[v])) fail("attractor removed from C " + describe(mgr_.to_ids(c)) + " disagrees at vertex " + std::to_string(v));
    }
  }

  void shrinks(const Set& before, const Set& after) {
    ++checks_;
    if (mgr_.to_ids(after).size() >= mgr_.to_ids(before).size()) fail("bad-vertex removal did not shrink the candidate");
  }

 private:
  oracle::Mask mask(const Set& s) const { return oracle::to_mask(g_.n(), mgr_.to_ids(s)); }

  bool is_top(const oracle::Mask& c, const oracle::Mask& s) const {
    for (std::size_t v = 0; v < g_.n(); ++v) {
      if (!c[v]) continue;
      for (Vertex u : g_.pred[v])
        if (s[u] && !c[u]) return false;
    }
    return true;
  }

  bool is_bottom(const oracle::Mask& c, const oracle::Mask& s) const {
    for (std::size_t v = 0; v < g_.n(); ++v) {
      if (!c[v]) continue;
      for (Vertex w : g_.succ[v])
        if (s[w] && !c[w]) return false;
    }
    return true;
  }

  static bool meets(const oracle::VertexList& ids, const oracle::Mask& m) {
    return std::any_of(ids.begin(), ids.end(), [&](Vertex v) { return m[v]; });
  }

  static std::string describe(const std::vector<Vertex>& ids) {
    std::string out = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
    return out + "}";
  }

  [[noreturn]] static void fail(const std::string& what) { throw InvariantViolation(what); }

  const SymbolicManager<Backend>& mgr_;
  const StreettPairs& tp_;
  oracle::Adjacency g_;
  oracle::Partition targets_;
  std::uint64_t checks_ = 0;
};

}  // namespace fairchk
