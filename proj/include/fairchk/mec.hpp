#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "fairchk/invariants.hpp"
#include "fairchk/reach.hpp"
#include "fairchk/run.hpp"
#include "fairchk/scc.hpp"
#include "fairchk/streett_graph.hpp"

namespace fairchk {

namespace detail {

// Random vertices of S with an edge leaving S.
template <SetBackend Backend>
VertexSet<Backend> random_exits(SymbolicManager<Backend>& mgr, const VertexSet<Backend>& s,
                                const VertexSet<Backend>& outside) {
  return mgr.intersect(mgr.intersect(s, mgr.random_vertices()), mgr.pre(outside));
}

template <SetBackend Backend>
std::vector<std::vector<Vertex>> sorted_ids(const SymbolicManager<Backend>& mgr,
                                            const std::vector<VertexSet<Backend>>& sets) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : sets) out.push_back(mgr.to_ids(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// MECs of P[domain] by repeated SCC decomposition and removal of the random
// attractor of vertices that can leave their SCC. The domain must not have
// outgoing random edges.
template <SetBackend Backend>
std::vector<VertexSet<Backend>> mec_basic_within(SymbolicManager<Backend>& mgr, const VertexSet<Backend>& domain,
                                                 const RunOptions& options, RunStats& stats,
                                                 InvariantChecker<Backend>* check = nullptr,
                                                 StepCounters* preprocessing = nullptr) {
  using Set = VertexSet<Backend>;
  std::deque<Candidate<Backend>> queue;
  for (auto& c : all_sccs(mgr, domain, options.scc_method)) queue.push_back({std::move(c), {}, {}});
  if (preprocessing) *preprocessing = mgr.snapshot_counters();

  std::vector<Set> mecs;
  while (!queue.empty()) {
    if (check) check->families(queue, mecs);
    auto s = std::move(queue.front().s);
    queue.pop_front();
    ++stats.iterations;

    auto rout = detail::random_exits(mgr, s, mgr.complement(s));
    if (!mgr.is_empty(rout)) {
      auto rest = mgr.minus(s, random_attractor(mgr, s, rout, options.debug_invariants));
      if (check) check->closed(rest);
      ++stats.scc_recomputations;
      for (auto& c : all_sccs(mgr, rest, options.scc_method)) queue.push_back({std::move(c), {}, {}});
    } else if (detail::has_edge(mgr, s)) {
      if (check) check->accepted_end_component(s, false);
      mecs.push_back(std::move(s));
    }
  }
  return mecs;
}

// Same decomposition; after an attractor removal only the vertices that lost
// outgoing edges are tracked, and a bottom SCC is split off by lock-step
// search unless many vertices lost edges.
template <SetBackend Backend>
std::vector<VertexSet<Backend>> mec_improved_within(SymbolicManager<Backend>& mgr, const VertexSet<Backend>& domain,
                                                    const RunOptions& options, RunStats& stats,
                                                    InvariantChecker<Backend>* check = nullptr,
                                                    StepCounters* preprocessing = nullptr) {
  using Set = VertexSet<Backend>;
  const std::size_t threshold = mec_threshold(options.threshold, mgr.n(), mgr.m());
  std::deque<Candidate<Backend>> queue;
  for (auto& c : all_sccs(mgr, domain, options.scc_method)) queue.push_back({std::move(c), {}, mgr.empty()});
  if (preprocessing) *preprocessing = mgr.snapshot_counters();

  std::vector<Set> mecs;
  while (!queue.empty()) {
    if (check) check->families(queue, mecs);
    auto [s, unused, tails] = std::move(queue.front());
    queue.pop_front();
    ++stats.iterations;

    auto rout = detail::random_exits(mgr, s, mgr.complement(s));
    if (!mgr.is_empty(rout)) {
      auto removed = random_attractor(mgr, s, rout, options.debug_invariants);
      s = mgr.minus(s, removed);
      tails = mgr.intersect(mgr.unite(tails, mgr.pre(removed)), s);
      if (check) check->closed(s);
    }
    if (!detail::has_edge(mgr, s)) continue;

    if (mgr.is_empty(tails)) {
      if (check) check->accepted_end_component(s, false);
      mecs.push_back(std::move(s));
    } else if (mgr.cardinality(tails) >= threshold) {
      ++stats.scc_recomputations;
      auto sccs = all_sccs(mgr, s, options.scc_method);
      if (sccs.size() == 1) {
        if (check) check->accepted_end_component(s, false);
        mecs.push_back(std::move(s));
      } else {
        for (auto& c : sccs) queue.push_back({std::move(c), {}, mgr.empty()});
      }
    } else {
      if (check) check->lock_step_start(s, mgr.empty(), tails, false);
      auto found = lock_step_search(mgr, s, mgr.empty(), std::move(tails));
      ++stats.lock_step_calls;
      stats.lock_step_rounds += found.rounds;
      if (check) check->lock_step_result(s, found.component);
      const auto& c = found.component;
      auto rest = mgr.minus(s, c);
      auto rest_tails = mgr.intersect(mgr.unite(found.tails, mgr.pre(c)), rest);
      if (detail::has_edge(mgr, c)) {
        if (check) check->accepted_end_component(c, false);
        mecs.push_back(c);
      }
      if (!mgr.is_empty(rest)) queue.push_back({std::move(rest), {}, std::move(rest_tails)});
    }
  }
  return mecs;
}

namespace detail {

template <SetBackend Backend, class Decompose>
RunReport run_mec(SymbolicManager<Backend>& mgr, const RunOptions& options, const char* name, Decompose decompose) {
  Stopwatch clock;
  RunReport report;
  report.algorithm = name;
  const StreettPairs no_pairs;
  std::optional<InvariantChecker<Backend>> check;
  if (options.debug_invariants) check.emplace(mgr, no_pairs, CoverTarget::mecs);
  auto mecs = decompose(mgr, mgr.universe(), options, report.stats, check ? &*check : nullptr,
                        &report.preprocessing);
  report.components = sorted_ids(mgr, mecs);
  report.counters = mgr.snapshot_counters();
  if (check) report.stats.invariant_checks = check->checks();
  report.wall_seconds = clock.seconds();
  return report;
}

}  // namespace detail

// MEC decomposition, sorted by minimum vertex id. Graphs are accepted and
// treated as MDPs without random vertices.
template <SetBackend Backend>
RunReport mec_basic(SymbolicManager<Backend>& mgr, const RunOptions& options = {}) {
  return detail::run_mec(mgr, options, "mec-basic", [](auto&&... args) { return mec_basic_within(args...); });
}

template <SetBackend Backend>
RunReport mec_improved(SymbolicManager<Backend>& mgr, const RunOptions& options = {}) {
  return detail::run_mec(mgr, options, "mec-improved", [](auto&&... args) { return mec_improved_within(args...); });
}

}  // namespace fairchk
