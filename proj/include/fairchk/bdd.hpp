#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

// A small reduced ordered BDD package: hash-consed node table, lossy
// computed table, conjunction with existential quantification of every
// other level, and order-preserving level shifts. No garbage collection and
// no dynamic reordering.
namespace fairchk::bdd {

using Node = std::uint32_t;

inline constexpr Node kFalse = 0;
inline constexpr Node kTrue = 1;
inline constexpr std::uint32_t kTerminalLevel = std::numeric_limits<std::uint32_t>::max();

class Manager {
 public:
  Manager() : cache_(std::size_t{1} << kMinCacheBits) {
    nodes_.push_back({kTerminalLevel, kFalse, kFalse});
    nodes_.push_back({kTerminalLevel, kTrue, kTrue});
  }

  std::uint32_t level(Node f) const { return nodes_[f].level; }
  Node low(Node f) const { return nodes_[f].low; }
  Node high(Node f) const { return nodes_[f].high; }
  std::size_t node_count() const { return nodes_.size(); }

  Node make(std::uint32_t level, Node lo, Node hi) {
    if (lo == hi) return lo;
    Key key{level, lo, hi};
    if (auto it = unique_.find(key); it != unique_.end()) return it->second;
    auto id = static_cast<Node>(nodes_.size());
    nodes_.push_back({level, lo, hi});
    unique_.emplace(key, id);
    if (nodes_.size() > cache_.size() && cache_.size() < (std::size_t{1} << kMaxCacheBits)) {
      cache_.assign(cache_.size() * 2, CacheLine{});
    }
    return id;
  }

  Node conj(Node a, Node b) { return apply(Op::conj, a, b); }
  Node disj(Node a, Node b) { return apply(Op::disj, a, b); }
  Node diff(Node a, Node b) { return apply(Op::diff, a, b); }

  // ∃(levels of the given parity). f ∧ g
  Node and_exists(Node f, Node g, std::uint32_t parity) {
    if (f == kFalse || g == kFalse) return kFalse;
    if (f == kTrue && g == kTrue) return kTrue;
    if (f > g) std::swap(f, g);
    const Op op = parity == 0 ? Op::relprod_even : Op::relprod_odd;
    if (Node cached; lookup(op, f, g, cached)) return cached;

    const std::uint32_t top = std::min(level(f), level(g));
    auto [f0, f1] = cofactors(f, top);
    auto [g0, g1] = cofactors(g, top);
    Node result;
    if (top % 2 == parity) {
      Node r0 = and_exists(f0, g0, parity);
      result = r0 == kTrue ? kTrue : disj(r0, and_exists(f1, g1, parity));
    } else {
      Node r0 = and_exists(f0, g0, parity);
      Node r1 = and_exists(f1, g1, parity);
      result = make(top, r0, r1);
    }
    store(op, f, g, result);
    return result;
  }

  // Renames every level l of f to l + delta. The caller guarantees the
  // renaming keeps the variable order.
  Node shift(Node f, int delta) {
    std::unordered_map<Node, Node> memo;
    return shift_rec(f, delta, memo);
  }

  // Builds the function whose satisfying assignments are exactly `keys`
  // (sorted, unique). Bit p of a key, counted from the most significant of
  // `width` bits, is tested at level level_of(p).
  template <class LevelOf>
  Node from_keys(std::span<const std::uint64_t> keys, std::uint32_t width, LevelOf&& level_of) {
    return build(keys, 0, width, level_of);
  }

 private:
  enum class Op : std::uint32_t { conj = 1, disj, diff, relprod_even, relprod_odd };

  struct Entry {
    std::uint32_t level;
    Node low, high;
  };

  struct Key {
    std::uint32_t level;
    Node low, high;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::uint64_t h = k.level;
      h = h * 0x9E3779B97F4A7C15ULL + k.low;
      h = h * 0x9E3779B97F4A7C15ULL + k.high;
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };

  struct CacheLine {
    Op op{};
    Node a = 0, b = 0, result = 0;
  };

  // The computed table grows with the node table.
  static constexpr unsigned kMinCacheBits = 10;
  static constexpr unsigned kMaxCacheBits = 20;

  std::pair<Node, Node> cofactors(Node f, std::uint32_t top) const {
    if (level(f) != top) return {f, f};
    return {low(f), high(f)};
  }

  std::size_t slot(Op op, Node a, Node b) const {
    std::uint64_t h = (static_cast<std::uint64_t>(a) * 0x9E3779B97F4A7C15ULL) ^
                      (static_cast<std::uint64_t>(b) * 0xC2B2AE3D27D4EB4FULL) ^
                      static_cast<std::uint64_t>(op);
    return static_cast<std::size_t>((h ^ (h >> 31)) & (cache_.size() - 1));
  }

  bool lookup(Op op, Node a, Node b, Node& out) const {
    const auto& line = cache_[slot(op, a, b)];
    if (line.op == op && line.a == a && line.b == b) {
      out = line.result;
      return true;
    }
    return false;
  }

  void store(Op op, Node a, Node b, Node result) { cache_[slot(op, a, b)] = {op, a, b, result}; }

  Node apply(Op op, Node a, Node b) {
    switch (op) {
      case Op::conj:
        if (a == kFalse || b == kFalse) return kFalse;
        if (a == kTrue || a == b) return b;
        if (b == kTrue) return a;
        if (a > b) std::swap(a, b);
        break;
      case Op::disj:
        if (a == kTrue || b == kTrue) return kTrue;
        if (a == kFalse || a == b) return b;
        if (b == kFalse) return a;
        if (a > b) std::swap(a, b);
        break;
      case Op::diff:
        if (a == kFalse || b == kTrue || a == b) return kFalse;
        if (b == kFalse) return a;
        break;
      default:
        break;
    }
    if (Node cached; lookup(op, a, b, cached)) return cached;
    const std::uint32_t top = std::min(level(a), level(b));
    auto [a0, a1] = cofactors(a, top);
    auto [b0, b1] = cofactors(b, top);
    Node r0 = apply(op, a0, b0);
    Node r1 = apply(op, a1, b1);
    Node result = make(top, r0, r1);
    store(op, a, b, result);
    return result;
  }

  Node shift_rec(Node f, int delta, std::unordered_map<Node, Node>& memo) {
    if (f == kFalse || f == kTrue) return f;
    if (auto it = memo.find(f); it != memo.end()) return it->second;
    Node lo = shift_rec(low(f), delta, memo);
    Node hi = shift_rec(high(f), delta, memo);
    Node result = make(static_cast<std::uint32_t>(static_cast<int>(level(f)) + delta), lo, hi);
    memo.emplace(f, result);
    return result;
  }

  template <class LevelOf>
  Node build(std::span<const std::uint64_t> keys, std::uint32_t pos, std::uint32_t width,
             LevelOf& level_of) {
    if (keys.empty()) return kFalse;
    if (pos == width) return kTrue;
    const std::uint64_t bit = std::uint64_t{1} << (width - 1 - pos);
    std::size_t split = 0;
    while (split < keys.size() && (keys[split] & bit) == 0) ++split;
    Node lo = build(keys.subspan(0, split), pos + 1, width, level_of);
    Node hi = build(keys.subspan(split), pos + 1, width, level_of);
    return make(level_of(pos), lo, hi);
  }

  std::vector<Entry> nodes_;
  std::unordered_map<Key, Node, KeyHash> unique_;
  std::vector<CacheLine> cache_;
};

}  // namespace fairchk::bdd
