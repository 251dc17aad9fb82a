#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fairchk/reach.hpp"
#include "fairchk/symbolic.hpp"

namespace fairchk {

enum class SccMethod {
  skeleton,          // forward sets with a skeleton spine, linear in symbolic steps
  forward_backward,  // plain forward/backward decomposition, for differential testing
};

namespace detail {

template <SetBackend Backend>
void sort_by_min_vertex(SymbolicManager<Backend>& mgr, std::vector<VertexSet<Backend>>& sets) {
  std::vector<std::pair<Vertex, std::size_t>> keys;
  keys.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) keys.emplace_back(mgr.pick(sets[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<VertexSet<Backend>> sorted;
  sorted.reserve(sets.size());
  for (const auto& key : keys) sorted.push_back(std::move(sets[key.second]));
  sets = std::move(sorted);
}

// Skeleton-based decomposition. A task is a vertex set together with an
// optional spine: a path inside the set whose last vertex `node` is where
// the next forward search starts. Searching from the end of a spine lets
// every SCC be found with a number of symbolic steps linear in its size.
template <SetBackend Backend>
std::vector<VertexSet<Backend>> sccs_skeleton(SymbolicManager<Backend>& mgr, const VertexSet<Backend>& domain) {
  using Set = VertexSet<Backend>;
  struct Task {
    Set vertices, spine, node;
  };
  std::vector<Set> result;
  std::vector<Task> stack;
  stack.push_back({domain, mgr.empty(), mgr.empty()});

  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    if (mgr.is_empty(task.vertices)) continue;
    if (mgr.is_empty(task.spine)) task.node = mgr.singleton(mgr.pick(task.vertices));

    // Forward search from node, remembering the BFS layers.
    std::vector<Set> layers;
    auto forward = mgr.empty();
    for (auto layer = task.node; !mgr.is_empty(layer);) {
      layers.push_back(layer);
      forward = mgr.unite(forward, layer);
      layer = mgr.minus(mgr.intersect(mgr.post(layer), task.vertices), forward);
    }

    // New spine: a shortest path from node to a vertex of the last layer.
    auto new_node = mgr.singleton(mgr.pick(layers.back()));
    auto new_spine = new_node;
    auto walker = new_node;
    for (std::size_t i = layers.size() - 1; i-- > 0;) {
      walker = mgr.singleton(mgr.pick(mgr.intersect(mgr.pre(walker), layers[i])));
      new_spine = mgr.unite(new_spine, walker);
    }

    // The SCC of node is its backward closure inside the forward set.
    auto scc = task.node;
    while (true) {
      auto grown = mgr.minus(mgr.intersect(mgr.pre(scc), forward), scc);
      if (mgr.is_empty(grown)) break;
      scc = mgr.unite(scc, grown);
    }
    result.push_back(scc);

    // Outside the forward set; the spine prefix outside the SCC carries over.
    auto rest_spine = mgr.minus(task.spine, scc);
    auto rest_node = mgr.is_empty(rest_spine)
                         ? mgr.empty()
                         : mgr.intersect(mgr.pre(mgr.intersect(scc, task.spine)), rest_spine);
    stack.push_back({mgr.minus(task.vertices, forward), rest_spine, rest_node});

    // Inside the forward set, beyond the SCC.
    stack.push_back({mgr.minus(forward, scc), mgr.minus(new_spine, scc), mgr.minus(new_node, scc)});
  }
  return result;
}

template <SetBackend Backend>
std::vector<VertexSet<Backend>> sccs_forward_backward(SymbolicManager<Backend>& mgr,
                                                     const VertexSet<Backend>& domain) {
  std::vector<VertexSet<Backend>> result;
  std::vector<VertexSet<Backend>> stack{domain};
  while (!stack.empty()) {
    auto vertices = std::move(stack.back());
    stack.pop_back();
    if (mgr.is_empty(vertices)) continue;
    auto root = mgr.singleton(mgr.pick(vertices));
    auto forward = reach_forward(mgr, vertices, root);
    auto scc = reach_backward(mgr, forward, root);
    result.push_back(scc);
    stack.push_back(mgr.minus(vertices, forward));
    stack.push_back(mgr.minus(forward, scc));
  }
  return result;
}

}  // namespace detail

// SCC partition of G[domain], ordered by minimum vertex id.
template <SetBackend Backend>
std::vector<VertexSet<Backend>> all_sccs(SymbolicManager<Backend>& mgr, const VertexSet<Backend>& domain,
                                        SccMethod method = SccMethod::skeleton) {
  auto sccs = method == SccMethod::skeleton ? detail::sccs_skeleton(mgr, domain)
                                            : detail::sccs_forward_backward(mgr, domain);
  detail::sort_by_min_vertex(mgr, sccs);
  return sccs;
}

template <SetBackend Backend>
struct LockStepResult {
  VertexSet<Backend> component;  // a top or bottom SCC of G[S]
  VertexSet<Backend> heads;      // pruned H_S
  VertexSet<Backend> tails;      // pruned T_S
  bool top = false;              // found by a backward search
  std::uint64_t rounds = 0;
};

// Symbolic lock-step search. Runs one backward search per vertex of `heads`
// and one forward search per vertex of `tails` inside G[S], one step each per
// round, until the first one converges. A search that runs into another
// live start vertex of its kind is abandoned. Provided every top SCC of G[S]
// meets `heads` and every bottom SCC meets `tails` (or both are empty and
// G[S] is strongly connected), the result is a top or bottom SCC of G[S].
template <SetBackend Backend>
LockStepResult<Backend> lock_step_search(SymbolicManager<Backend>& mgr, const VertexSet<Backend>& s,
                                         VertexSet<Backend> heads, VertexSet<Backend> tails) {
  using Set = VertexSet<Backend>;
  struct Search {
    Vertex start;
    Set reached;
  };
  if (mgr.is_empty(heads) && mgr.is_empty(tails)) {
    throw UsageError("lock-step search needs at least one start vertex");
  }

  // A vertex in both sets runs two independent searches.
  std::vector<Search> backward, forward;
  for (Vertex h : mgr.enumerate(heads)) backward.push_back({h, mgr.singleton(h)});
  for (Vertex t : mgr.enumerate(tails)) forward.push_back({t, mgr.singleton(t)});

  LockStepResult<Backend> out;
  while (true) {
    ++out.rounds;
    auto heads_next = heads;
    auto tails_next = tails;

    std::vector<Search> backward_live;
    for (auto& search : backward) {
      auto grown = mgr.intersect(mgr.unite(search.reached, mgr.pre(search.reached)), s);
      if (mgr.cardinality(mgr.intersect(grown, heads_next)) > 1) {
        heads_next = mgr.minus(heads_next, mgr.singleton(search.start));
        continue;
      }
      if (mgr.equal(grown, search.reached)) {
        out.component = std::move(search.reached);
        out.heads = std::move(heads_next);
        out.tails = std::move(tails);
        out.top = true;
        return out;
      }
      search.reached = std::move(grown);
      backward_live.push_back(std::move(search));
    }

    std::vector<Search> forward_live;
    for (auto& search : forward) {
      auto grown = mgr.intersect(mgr.unite(search.reached, mgr.post(search.reached)), s);
      if (mgr.cardinality(mgr.intersect(grown, tails_next)) > 1) {
        tails_next = mgr.minus(tails_next, mgr.singleton(search.start));
        continue;
      }
      if (mgr.equal(grown, search.reached)) {
        out.component = std::move(search.reached);
        out.heads = std::move(heads_next);
        out.tails = std::move(tails_next);
        out.top = false;
        return out;
      }
      search.reached = std::move(grown);
      forward_live.push_back(std::move(search));
    }

    backward = std::move(backward_live);
    forward = std::move(forward_live);
    heads = std::move(heads_next);
    tails = std::move(tails_next);
  }
}

}  // namespace fairchk
