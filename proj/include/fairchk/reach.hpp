#pragma once

#include <algorithm>
#include <string>

#include "fairchk/errors.hpp"
#include "fairchk/symbolic.hpp"

namespace fairchk {

// Vertices of `domain` that can reach `target` inside G[domain]: the least
// fixpoint of X = target ∪ (Pre(X) ∩ domain). Needs target ⊆ domain and
// at most |result \ target| + 1 Pre operations.
template <SetBackend Backend>
VertexSet<Backend> reach_backward(SymbolicManager<Backend>& mgr, const VertexSet<Backend>& domain,
                                  const VertexSet<Backend>& target) {
  auto reached = target;
  auto frontier = target;
  while (!mgr.is_empty(frontier)) {
    auto grown = mgr.minus(mgr.intersect(mgr.pre(frontier), domain), reached);
    reached = mgr.unite(reached, grown);
    frontier = grown;
  }
  return reached;
}

// Forward counterpart of reach_backward.
template <SetBackend Backend>
VertexSet<Backend> reach_forward(SymbolicManager<Backend>& mgr, const VertexSet<Backend>& domain,
                                 const VertexSet<Backend>& source) {
  auto reached = source;
  auto frontier = source;
  while (!mgr.is_empty(frontier)) {
    auto grown = mgr.minus(mgr.intersect(mgr.post(frontier), domain), reached);
    reached = mgr.unite(reached, grown);
    frontier = grown;
  }
  return reached;
}

// Random attractor of `target` in the sub-MDP induced by `domain`: the least
// set containing target and closed under CPre_R restricted to the domain.
// Random vertices of domain \ target must not have edges leaving the domain;
// with `check_precondition` that is verified on the explicit model, free of charge.
// Uses at most |result \ target| + 1 CPre_R operations.
template <SetBackend Backend>
VertexSet<Backend> random_attractor(SymbolicManager<Backend>& mgr, const VertexSet<Backend>& domain,
                                    const VertexSet<Backend>& target, bool check_precondition = false) {
  if (check_precondition) {
    const auto& model = mgr.model();
    auto members = mgr.to_ids(domain);
    auto targets = mgr.to_ids(target);
    for (Vertex v : members) {
      if (!model.is_random(v) || std::binary_search(targets.begin(), targets.end(), v)) continue;
      for (Vertex w : model.successors(v)) {
        if (!std::binary_search(members.begin(), members.end(), w)) {
          throw UsageError("random attractor: random vertex " + std::to_string(v) + " has an edge leaving the sub-MDP");
        }
      }
    }
  }
  auto attractor = target;
  while (true) {
    auto next = mgr.unite(attractor, mgr.cpre_random(attractor, domain));
    if (mgr.equal(next, attractor)) return attractor;
    attractor = next;
  }
}

// Vertices from which player 1 reaches `target` with probability one.
// Repeatedly drops the vertices that cannot reach the target inside the
// current set, together with every non-target vertex that the random player
// can force into them (the vertices already dropped count as losing too).
template <SetBackend Backend>
VertexSet<Backend> almost_sure_reach(SymbolicManager<Backend>& mgr, const VertexSet<Backend>& target) {
  auto current = mgr.universe();
  while (true) {
    auto can_reach = reach_backward(mgr, current, target);
    if (mgr.equal(can_reach, current)) return current;
    auto losing = mgr.complement(can_reach);
    while (true) {
      auto next = mgr.unite(losing, mgr.minus(mgr.cpre_random(losing), target));
      if (mgr.equal(next, losing)) break;
      losing = next;
    }
    current = mgr.minus(current, losing);
  }
}

}  // namespace fairchk
