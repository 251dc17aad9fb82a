#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "fairchk/model.hpp"

namespace fairchk {

// Fixed-width bit vectors over the vertex universe. Pre and Post walk the
// predecessor/successor lists of the members of the argument.
class BitsetBackend {
 public:
  struct Set {
    std::vector<std::uint64_t> words;
    friend bool operator==(const Set&, const Set&) = default;
  };

  explicit BitsetBackend(const Model& model) : model_(&model), n_(model.n()), words_((n_ + 63) / 64) {}

  Set empty_set() const { return Set{std::vector<std::uint64_t>(words_, 0)}; }

  Set full_set() const {
    Set s = empty_set();
    for (std::size_t w = 0; w < words_; ++w) s.words[w] = ~std::uint64_t{0};
    if (n_ % 64 != 0) s.words.back() = (std::uint64_t{1} << (n_ % 64)) - 1;
    return s;
  }

  Set singleton(Vertex v) const {
    Set s = empty_set();
    set_bit(s, v);
    return s;
  }

  Set from_ids(std::span<const Vertex> ids) const {
    Set s = empty_set();
    for (Vertex v : ids) set_bit(s, v);
    return s;
  }

  Set pre(const Set& z) const {
    Set out = empty_set();
    for_each(z, [&](Vertex w) {
      for (Vertex u : model_->predecessors(w)) set_bit(out, u);
    });
    return out;
  }

  Set post(const Set& z) const {
    Set out = empty_set();
    for_each(z, [&](Vertex u) {
      for (Vertex w : model_->successors(u)) set_bit(out, w);
    });
    return out;
  }

  Set unite(const Set& a, const Set& b) const {
    Set out = a;
    for (std::size_t w = 0; w < words_; ++w) out.words[w] |= b.words[w];
    return out;
  }
  Set intersect(const Set& a, const Set& b) const {
    Set out = a;
    for (std::size_t w = 0; w < words_; ++w) out.words[w] &= b.words[w];
    return out;
  }
  Set minus(const Set& a, const Set& b) const {
    Set out = a;
    for (std::size_t w = 0; w < words_; ++w) out.words[w] &= ~b.words[w];
    return out;
  }

  bool is_empty(const Set& s) const {
    for (auto word : s.words)
      if (word != 0) return false;
    return true;
  }
  bool equal(const Set& a, const Set& b) const { return a == b; }

  std::size_t count(const Set& s) const {
    std::size_t c = 0;
    for (auto word : s.words) c += static_cast<std::size_t>(std::popcount(word));
    return c;
  }

  Vertex min_vertex(const Set& s) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (s.words[w] != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(s.words[w]));
    return static_cast<Vertex>(n_);
  }

  std::vector<Vertex> to_ids(const Set& s) const {
    std::vector<Vertex> ids;
    for_each(s, [&](Vertex v) { ids.push_back(v); });
    return ids;
  }

 private:
  static void set_bit(Set& s, Vertex v) { s.words[v / 64] |= std::uint64_t{1} << (v % 64); }

  template <class Fn>
  void for_each(const Set& s, Fn&& fn) const {
    for (std::size_t w = 0; w < words_; ++w) {
      auto word = s.words[w];
      while (word != 0) {
        fn(static_cast<Vertex>(w * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  const Model* model_;
  std::size_t n_;
  std::size_t words_;
};

}  // namespace fairchk
