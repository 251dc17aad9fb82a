#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

#include "fairchk/model.hpp"
#include "fairchk/streett_pairs.hpp"

// Explicit reference implementations on adjacency lists. Nothing here goes
// through the symbolic layer; these are the ground truth for tests.
namespace fairchk::oracle {

using VertexList = std::vector<Vertex>;    // sorted ascending
using Partition = std::vector<VertexList>;  // sorted by first element
using Mask = std::vector<bool>;

struct Adjacency {
  std::vector<VertexList> succ, pred;
  Mask random;

  explicit Adjacency(const Model& model) : succ(model.n()), pred(model.n()), random(model.n(), false) {
    for (const auto& [u, v] : model.edges()) {
      succ[u].push_back(v);
      pred[v].push_back(u);
    }
    for (Vertex v : model.random_vertices()) random[v] = true;
  }

  std::size_t n() const { return succ.size(); }
};

inline Mask to_mask(std::size_t n, const VertexList& ids) {
  Mask mask(n, false);
  for (Vertex v : ids) mask[v] = true;
  return mask;
}

inline VertexList to_list(const Mask& mask) {
  VertexList ids;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) ids.push_back(static_cast<Vertex>(v));
  return ids;
}

inline Mask full_mask(std::size_t n) { return Mask(n, true); }

inline void canonicalize(Partition& parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
}

// Tarjan's algorithm on G[subset], iterative.
inline Partition tarjan_scc(const Adjacency& g, const Mask& subset) {
  const std::size_t n = g.n();
  constexpr std::uint32_t kUnvisited = UINT32_MAX;
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;  // vertex, next successor position
  std::uint32_t counter = 0;
  Partition result;

  for (std::size_t root = 0; root < n; ++root) {
    if (!subset[root] || index[root] != kUnvisited) continue;
    call.emplace_back(static_cast<Vertex>(root), 0);
    index[root] = low[root] = counter++;
    stack.push_back(static_cast<Vertex>(root));
    on_stack[root] = true;

    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < g.succ[v].size()) {
        Vertex w = g.succ[v][pos++];
        if (!subset[w]) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        VertexList scc;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          scc.push_back(w);
        } while (w != v);
        result.push_back(std::move(scc));
      }
      Vertex done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  canonicalize(result);
  return result;
}

inline Partition tarjan_scc(const Model& model, const VertexList& subset) {
  return tarjan_scc(Adjacency(model), to_mask(model.n(), subset));
}

inline bool has_internal_edge(const Adjacency& g, const Mask& s) {
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (!s[v]) continue;
    for (Vertex w : g.succ[v])
      if (s[w]) return true;
  }
  return false;
}

inline bool strongly_connected(const Adjacency& g, const Mask& s) {
  return tarjan_scc(g, s).size() == 1;
}

// Vertices of `subset` that can reach `target` inside G[subset].
inline Mask backward_reach(const Adjacency& g, const Mask& subset, const Mask& target) {
  Mask seen(g.n(), false);
  std::deque<Vertex> queue;
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (target[v] && subset[v]) {
      seen[v] = true;
      queue.push_back(static_cast<Vertex>(v));
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.pred[v]) {
      if (subset[u] && !seen[u]) {
        seen[u] = true;
        queue.push_back(u);
      }
    }
  }
  return seen;
}

// Random attractor of `target` inside P[subset]. A player-1 vertex joins once
// all of its successors inside the subset are in the attractor (it needs at
// least one such successor); a random vertex joins as soon as one does.
inline Mask attractor(const Adjacency& g, const Mask& subset, const Mask& target) {
  const std::size_t n = g.n();
  Mask attr(n, false);
  std::vector<std::size_t> remaining(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (!subset[v]) continue;
    for (Vertex w : g.succ[v])
      if (subset[w]) ++remaining[v];
  }
  std::deque<Vertex> queue;
  for (std::size_t v = 0; v < n; ++v) {
    if (subset[v] && target[v]) {
      attr[v] = true;
      queue.push_back(static_cast<Vertex>(v));
    }
  }
  while (!queue.empty()) {
    Vertex w = queue.front();
    queue.pop_front();
    for (Vertex u : g.pred[w]) {
      if (!subset[u] || attr[u]) continue;
      if (g.random[u] || --remaining[u] == 0) {
        attr[u] = true;
        queue.push_back(u);
      }
    }
  }
  return attr;
}

inline bool has_random_exit(const Adjacency& g, const Mask& s) {
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (!s[v] || !g.random[v]) continue;
    for (Vertex w : g.succ[v])
      if (!s[w]) return true;
  }
  return false;
}

inline bool is_end_component(const Adjacency& g, const Mask& s) {
  return !has_random_exit(g, s) && has_internal_edge(g, s) && strongly_connected(g, s);
}

inline bool is_good(const StreettPairs& tp, const Mask& s) {
  auto meets = [&](const VertexList& side) {
    return std::any_of(side.begin(), side.end(), [&](Vertex v) { return s[v]; });
  };
  for (const auto& p : tp.pairs)
    if (meets(p.lower) && !meets(p.upper)) return false;
  return true;
}

inline Mask bad(const StreettPairs& tp, const Mask& s) {
  Mask result(s.size(), false);
  for (const auto& p : tp.pairs) {
    bool upper_hit = std::any_of(p.upper.begin(), p.upper.end(), [&](Vertex v) { return s[v]; });
    if (upper_hit) continue;
    for (Vertex v : p.lower)
      if (s[v]) result[v] = true;
  }
  return result;
}

inline Mask minus(Mask a, const Mask& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (b[v]) a[v] = false;
  return a;
}

inline bool any(const Mask& s) { return std::find(s.begin(), s.end(), true) != s.end(); }

// MEC decomposition of P[subset], where subset has no outgoing random edges.
// Repeatedly splits into SCCs and strips the attractor of random vertices
// that leave their SCC.
inline Partition mecs_within(const Adjacency& g, const Mask& subset) {
  Partition result;
  std::deque<Mask> work{subset};
  while (!work.empty()) {
    Mask s = std::move(work.front());
    work.pop_front();
    for (const auto& scc : tarjan_scc(g, s)) {
      Mask c = to_mask(g.n(), scc);
      Mask leaving(g.n(), false);
      bool any_leaving = false;
      for (Vertex v : scc) {
        if (!g.random[v]) continue;
        for (Vertex w : g.succ[v]) {
          if (!c[w]) {
            leaving[v] = true;
            any_leaving = true;
          }
        }
      }
      if (any_leaving) {
        Mask rest = minus(c, attractor(g, c, leaving));
        if (any(rest)) work.push_back(std::move(rest));
      } else if (has_internal_edge(g, c)) {
        result.push_back(scc);
      }
    }
  }
  canonicalize(result);
  return result;
}

inline Partition explicit_mec(const Model& model) {
  Adjacency g(model);
  return mecs_within(g, full_mask(model.n()));
}

inline Partition explicit_mec_within(const Model& model, const VertexList& subset) {
  Adjacency g(model);
  return mecs_within(g, to_mask(model.n(), subset));
}

// Maximal good components of a graph: SCCs are repeatedly split after
// deleting bad vertices.
inline Partition good_components(const Adjacency& g, const StreettPairs& tp) {
  Partition result;
  std::deque<Mask> work{full_mask(g.n())};
  while (!work.empty()) {
    Mask s = std::move(work.front());
    work.pop_front();
    for (const auto& scc : tarjan_scc(g, s)) {
      Mask c = to_mask(g.n(), scc);
      Mask b = bad(tp, c);
      if (any(b)) {
        work.push_back(minus(c, b));
      } else if (has_internal_edge(g, c)) {
        result.push_back(scc);
      }
    }
  }
  canonicalize(result);
  return result;
}

// Maximal good end-components of an MDP: MECs are repeatedly split after
// deleting the attractor of their bad vertices.
inline Partition good_end_components(const Adjacency& g, const StreettPairs& tp) {
  Partition result;
  std::deque<Mask> work;
  for (const auto& mec : mecs_within(g, full_mask(g.n()))) work.push_back(to_mask(g.n(), mec));
  while (!work.empty()) {
    Mask s = std::move(work.front());
    work.pop_front();
    Mask b = bad(tp, s);
    if (!any(b)) {
      result.push_back(to_list(s));
      continue;
    }
    Mask rest = minus(s, attractor(g, s, b));
    for (const auto& mec : mecs_within(g, rest)) work.push_back(to_mask(g.n(), mec));
  }
  canonicalize(result);
  return result;
}

// Almost-sure reachability as the nested fixpoint
//   νY. μX. T ∪ {v ∈ V1 | Out(v) ∩ X ≠ ∅} ∪ {v ∈ VR | Out(v) ⊆ Y, Out(v) ∩ X ≠ ∅}.
inline Mask almost_sure_reach(const Adjacency& g, const Mask& target) {
  const std::size_t n = g.n();
  Mask y = full_mask(n);
  while (true) {
    Mask x = target;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (x[v]) continue;
        bool hits = std::any_of(g.succ[v].begin(), g.succ[v].end(), [&](Vertex w) { return x[w]; });
        bool stays = !g.random[v] ||
                     std::all_of(g.succ[v].begin(), g.succ[v].end(), [&](Vertex w) { return y[w]; });
        if (hits && stays) {
          x[v] = true;
          grew = true;
        }
      }
    }
    if (x == y) return y;
    y = std::move(x);
  }
}

inline Mask union_of(std::size_t n, const Partition& parts) {
  Mask s(n, false);
  for (const auto& p : parts)
    for (Vertex v : p) s[v] = true;
  return s;
}

inline VertexList explicit_streett_graph(const Model& model, const StreettPairs& tp) {
  Adjacency g(model);
  auto good = union_of(model.n(), good_components(g, tp));
  return to_list(backward_reach(g, full_mask(model.n()), good));
}

inline VertexList explicit_streett_mdp(const Model& model, const StreettPairs& tp) {
  Adjacency g(model);
  auto good = union_of(model.n(), good_end_components(g, tp));
  return to_list(almost_sure_reach(g, good));
}

inline VertexList explicit_almost_sure_reach(const Model& model, const VertexList& target) {
  Adjacency g(model);
  return to_list(almost_sure_reach(g, to_mask(model.n(), target)));
}

// --- brute force over all vertex subsets, small n only ---------------------

inline Mask subset_mask(std::size_t n, std::uint64_t bits) {
  Mask s(n, false);
  for (std::size_t v = 0; v < n; ++v) s[v] = (bits >> v) & 1U;
  return s;
}

// Inclusion-maximal sets among those accepted by `keep`.
template <class Pred>
Partition maximal_subsets(std::size_t n, Pred&& keep) {
  std::vector<std::uint64_t> accepted;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits)
    if (keep(subset_mask(n, bits))) accepted.push_back(bits);
  Partition result;
  for (auto a : accepted) {
    bool maximal = std::none_of(accepted.begin(), accepted.end(),
                                [&](std::uint64_t b) { return b != a && (a & b) == a; });
    if (maximal) result.push_back(to_list(subset_mask(n, a)));
  }
  canonicalize(result);
  return result;
}

inline Partition brute_force_mec(const Model& model) {
  Adjacency g(model);
  return maximal_subsets(model.n(), [&](const Mask& s) { return is_end_component(g, s); });
}

inline Partition brute_force_good_end_components(const Model& model, const StreettPairs& tp) {
  Adjacency g(model);
  return maximal_subsets(model.n(), [&](const Mask& s) { return is_end_component(g, s) && is_good(tp, s); });
}

}  // namespace fairchk::oracle
