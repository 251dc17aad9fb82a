#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "fairchk/invariants.hpp"
#include "fairchk/mec.hpp"
#include "fairchk/reach.hpp"
#include "fairchk/run.hpp"
#include "fairchk/scc.hpp"
#include "fairchk/streett_graph.hpp"
#include "fairchk/symbolic_pairs.hpp"

namespace fairchk {

// Almost-sure winning set of an MDP with a Streett objective: MECs are
// refined by removing the random attractor of their bad vertices until only
// good end-components remain, which are then reached almost surely.
template <SetBackend Backend>
RunReport streett_mdp_basic(SymbolicManager<Backend>& mgr, const StreettPairs& tp, const RunOptions& options = {}) {
  using Set = VertexSet<Backend>;
  detail::require_kind(mgr, ModelKind::mdp, "streett-mdp");
  detail::Stopwatch clock;
  RunReport report;
  report.algorithm = "streett-mdp-basic";
  SymbolicPairs<Backend> pairs(mgr, tp);
  std::optional<InvariantChecker<Backend>> check;
  if (options.debug_invariants) check.emplace(mgr, tp, CoverTarget::good_end_components);

  RunStats mec_stats;
  std::deque<Candidate<Backend>> queue;
  for (auto& x : mec_improved_within(mgr, mgr.universe(), options, mec_stats)) queue.push_back({std::move(x), {}, {}});
  report.preprocessing = mgr.snapshot_counters();

  std::vector<Set> good;
  while (!queue.empty()) {
    if (check) check->families(queue, good);
    auto s = std::move(queue.front().s);
    queue.pop_front();
    ++report.stats.iterations;

    auto b = bad_vertices(mgr, s, pairs);
    if (mgr.is_empty(b)) {
      if (check) check->accepted_end_component(s, true);
      good.push_back(std::move(s));
      continue;
    }
    auto rest = mgr.minus(s, random_attractor(mgr, s, b, options.debug_invariants));
    if (check) check->closed(rest);
    ++report.stats.scc_recomputations;
    for (auto& x : mec_basic_within(mgr, rest, options, report.stats)) queue.push_back({std::move(x), {}, {}});
  }

  auto winning = almost_sure_reach(mgr, detail::union_all(mgr, good));
  report.winning = mgr.to_ids(winning);
  report.counters = mgr.snapshot_counters();
  if (check) report.stats.invariant_checks = check->checks();
  report.wall_seconds = clock.seconds();
  return report;
}

// Same winning set; bad-vertex removal is interleaved with the end-component
// refinement, which uses lock-step search while few vertices lost edges.
template <SetBackend Backend>
RunReport streett_mdp_improved(SymbolicManager<Backend>& mgr, const StreettPairs& tp,
                               const RunOptions& options = {}) {
  using Set = VertexSet<Backend>;
  detail::require_kind(mgr, ModelKind::mdp, "streett-mdp");
  detail::Stopwatch clock;
  RunReport report;
  report.algorithm = "streett-mdp-improved";
  SymbolicPairs<Backend> pairs(mgr, tp);
  std::optional<InvariantChecker<Backend>> check;
  if (options.debug_invariants) check.emplace(mgr, tp, CoverTarget::good_end_components);
  const std::size_t threshold = streett_threshold(options.threshold, mgr.n(), mgr.m());
  const bool debug = options.debug_invariants;

  RunStats mec_stats;
  std::deque<Candidate<Backend>> queue;
  for (auto& x : mec_improved_within(mgr, mgr.universe(), options, mec_stats)) {
    queue.push_back({std::move(x), mgr.empty(), mgr.empty()});
  }
  report.preprocessing = mgr.snapshot_counters();

  // Splits C off a candidate: removes from C the attractor of its random
  // vertices with edges into `outside`, and records the boundary.
  auto trim = [&](Set c, const Set& outside) -> Candidate<Backend> {
    auto rout = detail::random_exits(mgr, c, outside);
    if (mgr.is_empty(rout)) return {std::move(c), mgr.empty(), mgr.empty()};
    auto removed = random_attractor(mgr, c, rout, debug);
    c = mgr.minus(c, removed);
    auto heads = mgr.intersect(mgr.post(removed), c);
    auto tails = mgr.intersect(mgr.pre(removed), c);
    return {std::move(c), std::move(heads), std::move(tails)};
  };

  std::vector<Set> good;
  while (!queue.empty()) {
    if (check) check->families(queue, good);
    auto [s, heads, tails] = std::move(queue.front());
    queue.pop_front();
    ++report.stats.iterations;

    for (auto b = bad_vertices(mgr, s, pairs); !mgr.is_empty(b); b = bad_vertices(mgr, s, pairs)) {
      auto removed = random_attractor(mgr, s, b, debug);
      s = mgr.minus(s, removed);
      heads = mgr.intersect(mgr.unite(heads, mgr.post(removed)), s);
      tails = mgr.intersect(mgr.unite(tails, mgr.pre(removed)), s);
      if (check) check->closed(s);
    }
    if (!detail::has_edge(mgr, s)) continue;

    if (mgr.is_empty(heads) && mgr.is_empty(tails)) {
      if (check) check->accepted_end_component(s, true);
      good.push_back(std::move(s));
    } else if (mgr.cardinality(heads) + mgr.cardinality(tails) >= threshold) {
      ++report.stats.scc_recomputations;
      auto sccs = all_sccs(mgr, s, options.scc_method);
      if (sccs.size() == 1) {
        if (check) check->accepted_end_component(s, true);
        good.push_back(std::move(s));
        continue;
      }
      for (auto& c : sccs) {
        auto piece = trim(c, mgr.minus(s, c));
        if (check) check->closed(piece.s);
        if (!mgr.is_empty(piece.s)) queue.push_back(std::move(piece));
      }
    } else {
      if (check) check->lock_step_start(s, heads, tails);
      auto found = lock_step_search(mgr, s, std::move(heads), std::move(tails));
      ++report.stats.lock_step_calls;
      report.stats.lock_step_rounds += found.rounds;
      if (check) check->lock_step_result(s, found.component);
      if (mgr.equal(found.component, s)) {
        if (check) check->accepted_end_component(s, true);
        good.push_back(std::move(s));
        continue;
      }
      const auto& c = found.component;
      auto piece = trim(c, mgr.minus(s, c));
      if (check) check->attractor_slice(s, c, piece.s);
      auto removed = random_attractor(mgr, s, c, debug);
      auto rest = mgr.minus(s, removed);
      auto rest_heads = mgr.intersect(mgr.unite(found.heads, mgr.post(removed)), rest);
      auto rest_tails = mgr.intersect(mgr.unite(found.tails, mgr.pre(removed)), rest);
      if (check) {
        check->closed(rest);
        check->closed(piece.s);
      }
      if (!mgr.is_empty(rest)) queue.push_back({std::move(rest), std::move(rest_heads), std::move(rest_tails)});
      if (!mgr.is_empty(piece.s)) queue.push_back(std::move(piece));
    }
  }

  auto winning = almost_sure_reach(mgr, detail::union_all(mgr, good));
  report.winning = mgr.to_ids(winning);
  report.counters = mgr.snapshot_counters();
  if (check) report.stats.invariant_checks = check->checks();
  report.wall_seconds = clock.seconds();
  return report;
}

}  // namespace fairchk
