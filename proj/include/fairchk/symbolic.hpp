#pragma once

#include <atomic>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fairchk/errors.hpp"
#include "fairchk/model.hpp"

namespace fairchk {

// Exact accounting of the primitive operations issued through a manager.
//
// The headline figure counts Pre and Post only. CPre_R is charged one
// cpre_op; the Pre and set operations it expands into are tracked in the
// cpre_expanded_* fields and are not folded into pre_ops or set_ops.
// Emptiness and equality tests are constant time on canonical
// representations and are not charged.
struct StepCounters {
  std::uint64_t pre_ops = 0;
  std::uint64_t post_ops = 0;
  std::uint64_t cpre_ops = 0;
  std::uint64_t set_ops = 0;
  std::uint64_t cardinality_ops = 0;
  std::uint64_t pick_ops = 0;
  std::uint64_t cpre_expanded_pre = 0;
  std::uint64_t cpre_expanded_set = 0;

  std::uint64_t headline() const noexcept { return pre_ops + post_ops; }

  // CPre_R charged by its expansion into Pre operations.
  std::uint64_t headline_with_cpre() const noexcept { return pre_ops + post_ops + cpre_expanded_pre; }

  friend bool operator==(const StepCounters&, const StepCounters&) = default;

  friend StepCounters operator-(StepCounters a, const StepCounters& b) {
    a.pre_ops -= b.pre_ops;
    a.post_ops -= b.post_ops;
    a.cpre_ops -= b.cpre_ops;
    a.set_ops -= b.set_ops;
    a.cardinality_ops -= b.cardinality_ops;
    a.pick_ops -= b.pick_ops;
    a.cpre_expanded_pre -= b.cpre_expanded_pre;
    a.cpre_expanded_set -= b.cpre_expanded_set;
    return a;
  }
};

// What a set representation has to provide. Backends are not charged for
// anything; the manager does the accounting.
template <class B>
concept SetBackend = requires(const B& b, const typename B::Set& s, Vertex v,
                              std::span<const Vertex> ids) {
  typename B::Set;
  { b.empty_set() } -> std::same_as<typename B::Set>;
  { b.full_set() } -> std::same_as<typename B::Set>;
  { b.singleton(v) } -> std::same_as<typename B::Set>;
  { b.from_ids(ids) } -> std::same_as<typename B::Set>;
  { b.pre(s) } -> std::same_as<typename B::Set>;
  { b.post(s) } -> std::same_as<typename B::Set>;
  { b.unite(s, s) } -> std::same_as<typename B::Set>;
  { b.intersect(s, s) } -> std::same_as<typename B::Set>;
  { b.minus(s, s) } -> std::same_as<typename B::Set>;
  { b.is_empty(s) } -> std::same_as<bool>;
  { b.equal(s, s) } -> std::same_as<bool>;
  { b.count(s) } -> std::same_as<std::size_t>;
  { b.min_vertex(s) } -> std::same_as<Vertex>;
  { b.to_ids(s) } -> std::same_as<std::vector<Vertex>>;
};

template <SetBackend Backend>
class SymbolicManager;

// Handle to a vertex set owned by one SymbolicManager.
template <SetBackend Backend>
class VertexSet {
 public:
  VertexSet() = default;

 private:
  friend class SymbolicManager<Backend>;
  VertexSet(std::uint64_t owner, typename Backend::Set repr) : owner_(owner), repr_(std::move(repr)) {}

  std::uint64_t owner_ = 0;
  typename Backend::Set repr_{};
};

namespace detail {
inline std::uint64_t next_manager_id() {
  static std::atomic<std::uint64_t> counter{0};
  return ++counter;
}
}  // namespace detail

// Owns the vertex universe, the edge relation and the player partition of a
// model, and is the only access path to them. Confined to one thread.
// The model must outlive the manager.
template <SetBackend Backend>
class SymbolicManager {
 public:
  using Set = VertexSet<Backend>;
  using backend_type = Backend;

  explicit SymbolicManager(const Model& model)
      : model_(&model), backend_(model), id_(detail::next_manager_id()) {
    universe_ = wrap(backend_.full_set());
    random_ = wrap(backend_.from_ids(model.random_vertices()));
    player1_ = wrap(backend_.minus(universe_.repr_, random_.repr_));
  }

  SymbolicManager(const SymbolicManager&) = delete;
  SymbolicManager& operator=(const SymbolicManager&) = delete;

  const Model& model() const noexcept { return *model_; }
  std::size_t n() const noexcept { return model_->n(); }
  std::size_t m() const noexcept { return model_->m(); }

  // Constants and constructors; free of charge.
  Set empty() const { return wrap(backend_.empty_set()); }
  const Set& universe() const noexcept { return universe_; }
  const Set& random_vertices() const noexcept { return random_; }
  const Set& player1_vertices() const noexcept { return player1_; }

  Set singleton(Vertex v) const {
    if (v >= n()) throw UsageError("vertex " + std::to_string(v) + " out of range");
    return wrap(backend_.singleton(v));
  }

  Set from_ids(std::span<const Vertex> ids) const {
    for (Vertex v : ids)
      if (v >= n()) throw UsageError("vertex " + std::to_string(v) + " out of range");
    return wrap(backend_.from_ids(ids));
  }
  Set from_ids(std::initializer_list<Vertex> ids) const {
    return from_ids(std::span<const Vertex>(ids.begin(), ids.size()));
  }

  // Read-out for reporting and debug checks; not an algorithmic operation.
  std::vector<Vertex> to_ids(const Set& z) const { return backend_.to_ids(checked(z)); }

  // --- one-step operators -------------------------------------------------

  // {v | Out(v) ∩ Z ≠ ∅}
  Set pre(const Set& z) {
    ++counters_.pre_ops;
    return wrap(backend_.pre(checked(z)));
  }

  // {v | In(v) ∩ Z ≠ ∅}
  Set post(const Set& z) {
    ++counters_.post_ops;
    return wrap(backend_.post(checked(z)));
  }

  // {v ∈ V1 | Out(v) ⊆ Z} ∪ {v ∈ VR | Out(v) ∩ Z ≠ ∅},
  // evaluated as Pre(Z) \ (V1 ∩ Pre(V \ Z)).
  Set cpre_random(const Set& z) {
    const auto& zr = checked(z);
    ++counters_.cpre_ops;
    counters_.cpre_expanded_pre += 2;
    counters_.cpre_expanded_set += 3;
    auto hit = backend_.pre(zr);
    auto escape = backend_.intersect(player1_.repr_, backend_.pre(backend_.minus(universe_.repr_, zr)));
    return wrap(backend_.minus(hit, escape));
  }

  // CPre_R in the sub-MDP induced by `domain`, for Z ⊆ domain: player-1 vertices of the
  // domain whose successors inside the domain all lie in Z (and at least one
  // does), plus random vertices of the domain with a successor in Z.
  // Evaluated as (domain ∩ Pre(Z)) \ (V1 ∩ Pre(domain \ Z)).
  Set cpre_random(const Set& z, const Set& domain) {
    const auto& zr = checked(z);
    const auto& dr = checked(domain);
    ++counters_.cpre_ops;
    counters_.cpre_expanded_pre += 2;
    counters_.cpre_expanded_set += 4;
    auto hit = backend_.intersect(dr, backend_.pre(zr));
    auto escape = backend_.intersect(player1_.repr_, backend_.pre(backend_.minus(dr, zr)));
    return wrap(backend_.minus(hit, escape));
  }

  // --- set algebra ----------------------------------------------------------

  Set unite(const Set& a, const Set& b) {
    ++counters_.set_ops;
    return wrap(backend_.unite(checked(a), checked(b)));
  }
  Set intersect(const Set& a, const Set& b) {
    ++counters_.set_ops;
    return wrap(backend_.intersect(checked(a), checked(b)));
  }
  Set minus(const Set& a, const Set& b) {
    ++counters_.set_ops;
    return wrap(backend_.minus(checked(a), checked(b)));
  }
  // V \ a
  Set complement(const Set& a) {
    ++counters_.set_ops;
    return wrap(backend_.minus(universe_.repr_, checked(a)));
  }

  bool is_empty(const Set& z) const { return backend_.is_empty(checked(z)); }
  bool equal(const Set& a, const Set& b) const { return backend_.equal(checked(a), checked(b)); }

  // --- cardinality and picking ---------------------------------------------

  std::size_t cardinality(const Set& z) {
    ++counters_.cardinality_ops;
    return backend_.count(checked(z));
  }

  // Minimum vertex id of a non-empty set.
  Vertex pick(const Set& z) {
    const auto& zr = checked(z);
    if (backend_.is_empty(zr)) throw UsageError("pick from an empty vertex set");
    ++counters_.pick_ops;
    return backend_.min_vertex(zr);
  }

  // Members in ascending order, one pick per member.
  std::vector<Vertex> enumerate(const Set& z) {
    auto ids = backend_.to_ids(checked(z));
    counters_.pick_ops += ids.size();
    return ids;
  }

  const StepCounters& counters() const noexcept { return counters_; }
  StepCounters snapshot_counters() const { return counters_; }

  bool owns(const Set& z) const noexcept { return z.owner_ == id_; }

 private:
  Set wrap(typename Backend::Set repr) const { return Set(id_, std::move(repr)); }

  const typename Backend::Set& checked(const Set& z) const {
    if (z.owner_ != id_) throw UsageError("vertex set belongs to a different manager");
    return z.repr_;
  }

  const Model* model_;
  Backend backend_;
  std::uint64_t id_;
  StepCounters counters_;
  Set universe_, random_, player1_;
};

}  // namespace fairchk
