#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "fairchk/invariants.hpp"
#include "fairchk/reach.hpp"
#include "fairchk/run.hpp"
#include "fairchk/scc.hpp"
#include "fairchk/symbolic_pairs.hpp"

namespace fairchk {

namespace detail {

template <SetBackend Backend>
VertexSet<Backend> union_all(SymbolicManager<Backend>& mgr, const std::vector<VertexSet<Backend>>& sets) {
  if (sets.empty()) return mgr.empty();
  auto result = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) result = mgr.unite(result, sets[i]);
  return result;
}

template <SetBackend Backend>
bool has_edge(SymbolicManager<Backend>& mgr, const VertexSet<Backend>& s) {
  return !mgr.is_empty(s) && !mgr.is_empty(mgr.intersect(mgr.post(s), s));
}

template <SetBackend Backend>
void require_kind(const SymbolicManager<Backend>& mgr, ModelKind kind, const char* algorithm) {
  if (mgr.model().kind() != kind) {
    throw UsageError(std::string(algorithm) + " expects a " + std::string(to_string(kind)) + " model");
  }
}

}  // namespace detail

// Winning set of a graph with a Streett objective: repeated SCC
// decomposition after removing bad vertices.
template <SetBackend Backend>
RunReport streett_graph_basic(SymbolicManager<Backend>& mgr, const StreettPairs& tp, const RunOptions& options = {}) {
  using Set = VertexSet<Backend>;
  detail::require_kind(mgr, ModelKind::graph, "streett-graph");
  detail::Stopwatch clock;
  RunReport report;
  report.algorithm = "streett-graph-basic";
  SymbolicPairs<Backend> pairs(mgr, tp);
  std::optional<InvariantChecker<Backend>> check;
  if (options.debug_invariants) check.emplace(mgr, tp, CoverTarget::good_components);

  std::deque<Candidate<Backend>> queue;
  for (auto& c : all_sccs(mgr, mgr.universe(), options.scc_method)) queue.push_back({std::move(c), {}, {}});
  report.preprocessing = mgr.snapshot_counters();

  std::vector<Set> good;
  while (!queue.empty()) {
    if (check) check->families(queue, good);
    auto s = std::move(queue.front().s);
    queue.pop_front();
    ++report.stats.iterations;

    auto b = bad_vertices(mgr, s, pairs);
    if (!mgr.is_empty(b)) {
      auto rest = mgr.minus(s, b);
      if (check) check->shrinks(s, rest);
      ++report.stats.scc_recomputations;
      for (auto& c : all_sccs(mgr, rest, options.scc_method)) queue.push_back({std::move(c), {}, {}});
    } else if (detail::has_edge(mgr, s)) {
      if (check) check->accepted_component(s);
      good.push_back(std::move(s));
    }
  }

  auto winning = reach_backward(mgr, mgr.universe(), detail::union_all(mgr, good));
  report.winning = mgr.to_ids(winning);
  report.counters = mgr.snapshot_counters();
  if (check) report.stats.invariant_checks = check->checks();
  report.wall_seconds = clock.seconds();
  return report;
}

// Same winning set; candidates remember which vertices lost edges, and small
// changes are handled by lock-step search instead of a full SCC recomputation.
template <SetBackend Backend>
RunReport streett_graph_improved(SymbolicManager<Backend>& mgr, const StreettPairs& tp,
                                 const RunOptions& options = {}) {
  using Set = VertexSet<Backend>;
  detail::require_kind(mgr, ModelKind::graph, "streett-graph");
  detail::Stopwatch clock;
  RunReport report;
  report.algorithm = "streett-graph-improved";
  SymbolicPairs<Backend> pairs(mgr, tp);
  std::optional<InvariantChecker<Backend>> check;
  if (options.debug_invariants) check.emplace(mgr, tp, CoverTarget::good_components);
  const std::size_t threshold = streett_threshold(options.threshold, mgr.n(), mgr.m());

  std::deque<Candidate<Backend>> queue;
  for (auto& c : all_sccs(mgr, mgr.universe(), options.scc_method)) {
    queue.push_back({std::move(c), mgr.empty(), mgr.empty()});
  }
  report.preprocessing = mgr.snapshot_counters();

  std::vector<Set> good;
  while (!queue.empty()) {
    if (check) check->families(queue, good);
    auto [s, heads, tails] = std::move(queue.front());
    queue.pop_front();
    ++report.stats.iterations;

    for (auto b = bad_vertices(mgr, s, pairs); !mgr.is_empty(b); b = bad_vertices(mgr, s, pairs)) {
      auto rest = mgr.minus(s, b);
      if (check) check->shrinks(s, rest);
      s = std::move(rest);
      heads = mgr.intersect(mgr.unite(heads, mgr.post(b)), s);
      tails = mgr.intersect(mgr.unite(tails, mgr.pre(b)), s);
    }
    if (!detail::has_edge(mgr, s)) continue;

    if (mgr.is_empty(heads) && mgr.is_empty(tails)) {
      if (check) check->accepted_component(s);
      good.push_back(std::move(s));
    } else if (mgr.cardinality(heads) + mgr.cardinality(tails) >= threshold) {
      ++report.stats.scc_recomputations;
      auto sccs = all_sccs(mgr, s, options.scc_method);
      if (sccs.size() == 1) {
        if (check) check->accepted_component(s);
        good.push_back(std::move(s));
      } else {
        for (auto& c : sccs) queue.push_back({std::move(c), mgr.empty(), mgr.empty()});
      }
    } else {
      if (check) check->lock_step_start(s, heads, tails);
      auto found = lock_step_search(mgr, s, std::move(heads), std::move(tails));
      ++report.stats.lock_step_calls;
      report.stats.lock_step_rounds += found.rounds;
      if (check) check->lock_step_result(s, found.component);
      if (mgr.equal(found.component, s)) {
        if (check) check->accepted_component(s);
        good.push_back(std::move(s));
        continue;
      }
      const auto& c = found.component;
      auto rest = mgr.minus(s, c);
      auto rest_heads = mgr.intersect(mgr.unite(found.heads, mgr.post(c)), rest);
      auto rest_tails = mgr.intersect(mgr.unite(found.tails, mgr.pre(c)), rest);
      queue.push_back({std::move(rest), std::move(rest_heads), std::move(rest_tails)});
      queue.push_back({std::move(found.component), mgr.empty(), mgr.empty()});
    }
  }

  auto winning = reach_backward(mgr, mgr.universe(), detail::union_all(mgr, good));
  report.winning = mgr.to_ids(winning);
  report.counters = mgr.snapshot_counters();
  if (check) report.stats.invariant_checks = check->checks();
  report.wall_seconds = clock.seconds();
  return report;
}

}  // namespace fairchk
