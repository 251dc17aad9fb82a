#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "fairchk/bdd.hpp"
#include "fairchk/model.hpp"

namespace fairchk {

// Vertex sets as OBDDs over ceil(log2 n) boolean variables. The edge relation
// uses interleaved current/next variables in natural bit order, most
// significant bit first: current bit i sits at level 2*(b-1-i), its next-state
// copy directly below it.
class ObddBackend {
 public:
  struct Set {
    bdd::Node node = bdd::kFalse;
    friend bool operator==(const Set&, const Set&) = default;
  };

  explicit ObddBackend(const Model& model)
      : n_(model.n()), bits_(model.n() <= 2 ? 1 : static_cast<std::uint32_t>(std::bit_width(model.n() - 1))) {
    std::vector<std::uint64_t> all(n_);
    for (std::size_t v = 0; v < n_; ++v) all[v] = v;
    full_ = build_set(all);

    std::vector<std::uint64_t> keys;
    keys.reserve(model.m());
    for (const auto& [u, v] : model.edges()) keys.push_back(interleave(u, v));
    std::sort(keys.begin(), keys.end());
    edges_ = mgr_.from_keys(keys, 2 * bits_, [](std::uint32_t pos) { return pos; });
  }

  std::uint32_t bits() const noexcept { return bits_; }
  std::size_t node_count() const { return mgr_.node_count(); }

  Set empty_set() const { return {bdd::kFalse}; }
  Set full_set() const { return {full_}; }
  Set singleton(Vertex v) const {
    std::uint64_t key = v;
    return {build_set(std::span<const std::uint64_t>(&key, 1))};
  }
  Set from_ids(std::span<const Vertex> ids) const {
    std::vector<std::uint64_t> keys(ids.begin(), ids.end());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return {build_set(keys)};
  }

  // ∃x'. E(x, x') ∧ Z(x')
  Set pre(const Set& z) const {
    bdd::Node z_next = mgr_.shift(z.node, +1);
    return {mgr_.and_exists(edges_, z_next, 1)};
  }

  // (∃x. E(x, x') ∧ Z(x))[x' := x]
  Set post(const Set& z) const {
    bdd::Node image = mgr_.and_exists(edges_, z.node, 0);
    return {mgr_.shift(image, -1)};
  }

  Set unite(const Set& a, const Set& b) const { return {mgr_.disj(a.node, b.node)}; }
  Set intersect(const Set& a, const Set& b) const { return {mgr_.conj(a.node, b.node)}; }
  Set minus(const Set& a, const Set& b) const { return {mgr_.diff(a.node, b.node)}; }

  bool is_empty(const Set& s) const { return s.node == bdd::kFalse; }
  bool equal(const Set& a, const Set& b) const { return a.node == b.node; }

  std::size_t count(const Set& s) const {
    std::unordered_map<bdd::Node, std::uint64_t> memo;
    return static_cast<std::size_t>(count_rec(s.node, memo) << position(s.node));
  }

  Vertex min_vertex(const Set& s) const {
    std::uint64_t v = 0;
    bdd::Node node = s.node;
    for (std::uint32_t p = 0; p < bits_; ++p) {
      v <<= 1;
      if (position(node) != p) continue;
      if (mgr_.low(node) != bdd::kFalse) {
        node = mgr_.low(node);
      } else {
        v |= 1;
        node = mgr_.high(node);
      }
    }
    return static_cast<Vertex>(v);
  }

  std::vector<Vertex> to_ids(const Set& s) const {
    std::vector<Vertex> ids;
    enumerate(s.node, 0, 0, ids);
    return ids;
  }

 private:
  std::uint64_t interleave(Vertex u, Vertex v) const {
    std::uint64_t key = 0;
    for (std::uint32_t i = bits_; i-- > 0;) {
      key = (key << 1) | ((u >> i) & 1U);
      key = (key << 1) | ((v >> i) & 1U);
    }
    return key;
  }

  bdd::Node build_set(std::span<const std::uint64_t> keys) const {
    return mgr_.from_keys(keys, bits_, [](std::uint32_t pos) { return 2 * pos; });
  }

  // Position of a set node among the current-state variables; terminals sit
  // below the last variable.
  std::uint32_t position(bdd::Node f) const {
    auto level = mgr_.level(f);
    return level == bdd::kTerminalLevel ? bits_ : level / 2;
  }

  std::uint64_t count_rec(bdd::Node f, std::unordered_map<bdd::Node, std::uint64_t>& memo) const {
    if (f == bdd::kFalse) return 0;
    if (f == bdd::kTrue) return 1;
    if (auto it = memo.find(f); it != memo.end()) return it->second;
    const auto p = position(f);
    auto lo = mgr_.low(f), hi = mgr_.high(f);
    std::uint64_t c = (count_rec(lo, memo) << (position(lo) - p - 1)) +
                      (count_rec(hi, memo) << (position(hi) - p - 1));
    memo.emplace(f, c);
    return c;
  }

  void enumerate(bdd::Node f, std::uint32_t p, std::uint64_t prefix, std::vector<Vertex>& out) const {
    if (f == bdd::kFalse) return;
    if (p == bits_) {
      out.push_back(static_cast<Vertex>(prefix));
      return;
    }
    if (position(f) != p) {
      enumerate(f, p + 1, prefix << 1, out);
      enumerate(f, p + 1, (prefix << 1) | 1, out);
      return;
    }
    enumerate(mgr_.low(f), p + 1, prefix << 1, out);
    enumerate(mgr_.high(f), p + 1, (prefix << 1) | 1, out);
  }

  mutable bdd::Manager mgr_;
  std::size_t n_;
  std::uint32_t bits_;
  bdd::Node full_ = bdd::kFalse;
  bdd::Node edges_ = bdd::kFalse;
};

}  // namespace fairchk
