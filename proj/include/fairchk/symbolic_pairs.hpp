#pragma once

#include <utility>
#include <vector>

#include "fairchk/streett_pairs.hpp"
#include "fairchk/symbolic.hpp"

namespace fairchk {

// Streett pairs as vertex sets of one manager.
template <SetBackend Backend>
struct SymbolicPairs {
  using Set = VertexSet<Backend>;
  std::vector<std::pair<Set, Set>> pairs;

  SymbolicPairs(const SymbolicManager<Backend>& mgr, const StreettPairs& tp) {
    for (const auto& p : tp.pairs) pairs.emplace_back(mgr.from_ids(p.lower), mgr.from_ids(p.upper));
  }
};

// Bad(S): the union of L_i ∩ S over all i with U_i ∩ S = ∅.
// At most 2k set operations.
template <SetBackend Backend>
VertexSet<Backend> bad_vertices(SymbolicManager<Backend>& mgr, const VertexSet<Backend>& s,
                                const SymbolicPairs<Backend>& tp) {
  bool any = false;
  VertexSet<Backend> lower_union;
  for (const auto& [lower, upper] : tp.pairs) {
    if (!mgr.is_empty(mgr.intersect(upper, s))) continue;
    lower_union = any ? mgr.unite(lower_union, lower) : lower;
    any = true;
  }
  return any ? mgr.intersect(lower_union, s) : mgr.empty();
}

}  // namespace fairchk
