#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fairchk/errors.hpp"

namespace fairchk {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class ModelKind { graph, mdp };

inline std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::graph ? "graph" : "mdp";
}

// A graph or an MDP given by the support of its transition function.
// Vertices are the dense ids 0..n-1; every vertex has a successor.
// Immutable once built.
class Model {
 public:
  Model() = default;

  static Model build(ModelKind kind, std::size_t n, std::vector<Edge> edges,
                     std::vector<Vertex> random_vertices = {}) {
    Model model;
    model.kind_ = kind;
    model.n_ = n;
    model.edges_ = std::move(edges);
    model.random_.assign(n, false);

    if (kind == ModelKind::graph && !random_vertices.empty()) {
      throw ValidationError("a graph cannot have random vertices");
    }
    for (Vertex v : random_vertices) {
      if (v >= n) {
        throw ValidationError("random vertex " + std::to_string(v) + " out of range");
      }
      if (model.random_[v]) {
        throw ValidationError("random vertex " + std::to_string(v) + " listed twice");
      }
      model.random_[v] = true;
    }

    std::vector<std::size_t> out_degree(n, 0), in_degree(n, 0);
    for (const auto& [u, v] : model.edges_) {
      if (u >= n || v >= n) {
        throw ValidationError("edge " + std::to_string(u) + " -> " + std::to_string(v) +
                              " has a vertex out of range");
      }
      ++out_degree[u];
      ++in_degree[v];
    }

    auto fill_csr = [n](const std::vector<std::size_t>& degree, std::vector<std::size_t>& offsets) {
      offsets.assign(n + 1, 0);
      for (std::size_t v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + degree[v];
    };
    fill_csr(out_degree, model.succ_offsets_);
    fill_csr(in_degree, model.pred_offsets_);
    model.succ_.resize(model.edges_.size());
    model.pred_.resize(model.edges_.size());
    std::vector<std::size_t> out_fill(model.succ_offsets_.begin(), model.succ_offsets_.end() - 1);
    std::vector<std::size_t> in_fill(model.pred_offsets_.begin(), model.pred_offsets_.end() - 1);
    for (const auto& [u, v] : model.edges_) {
      model.succ_[out_fill[u]++] = v;
      model.pred_[in_fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto first = model.succ_.begin() + static_cast<std::ptrdiff_t>(model.succ_offsets_[v]);
      auto last = model.succ_.begin() + static_cast<std::ptrdiff_t>(model.succ_offsets_[v + 1]);
      std::sort(first, last);
      if (std::adjacent_find(first, last) != last) {
        throw ValidationError("duplicate edge " + std::to_string(v) + " -> " +
                              std::to_string(*std::adjacent_find(first, last)));
      }
      std::sort(model.pred_.begin() + static_cast<std::ptrdiff_t>(model.pred_offsets_[v]),
                model.pred_.begin() + static_cast<std::ptrdiff_t>(model.pred_offsets_[v + 1]));
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (out_degree[v] == 0) {
        throw ValidationError("vertex " + std::to_string(v) + " has no outgoing edge");
      }
    }
    return model;
  }

  ModelKind kind() const noexcept { return kind_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> successors(Vertex v) const {
    return {succ_.data() + succ_offsets_[v], succ_offsets_[v + 1] - succ_offsets_[v]};
  }
  std::span<const Vertex> predecessors(Vertex v) const {
    return {pred_.data() + pred_offsets_[v], pred_offsets_[v + 1] - pred_offsets_[v]};
  }

  bool is_random(Vertex v) const { return random_[v]; }

  std::vector<Vertex> random_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
      if (random_[v]) out.push_back(v);
    return out;
  }

  friend bool operator==(const Model& a, const Model& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.edges_ == b.edges_ && a.random_ == b.random_;
  }

 private:
  ModelKind kind_ = ModelKind::graph;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<bool> random_;
  std::vector<std::size_t> succ_offsets_{0}, pred_offsets_{0};
  std::vector<Vertex> succ_, pred_;
};

namespace detail {

// Splits a line into whitespace-separated tokens, dropping a trailing `#` comment.
inline std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
  return tokens;
}

inline std::uint64_t parse_number(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.size() > 18 ||
      !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  }
  return std::stoull(tok);
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = tokenize(line);
    if (!tokens.empty()) fn(line_no, tokens);
  }
}

}  // namespace detail

// Parses the model text format:
//   graph <n> | mdp <n>
//   e <u> <v>            one per edge
//   random <v>...        mdp only, may repeat
inline Model parse_model(std::string_view text) {
  bool have_header = false;
  ModelKind kind = ModelKind::graph;
  std::uint64_t n = 0;
  std::vector<Edge> edges;
  std::vector<Vertex> random;

  detail::for_each_line(text, [&](std::size_t line, const std::vector<std::string>& tok) {
    if (!have_header) {
      if (tok.size() != 2 || (tok[0] != "graph" && tok[0] != "mdp")) {
        throw ParseError(line, "expected header 'graph <n>' or 'mdp <n>'");
      }
      kind = tok[0] == "graph" ? ModelKind::graph : ModelKind::mdp;
      n = detail::parse_number(tok[1], line);
      if (n > std::numeric_limits<Vertex>::max()) throw ParseError(line, "vertex count too large");
      have_header = true;
      return;
    }
    if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(line, "expected 'e <u> <v>'");
      auto u = detail::parse_number(tok[1], line);
      auto v = detail::parse_number(tok[2], line);
      if (u >= n || v >= n) {
        throw ValidationError("line " + std::to_string(line) + ": vertex out of range");
      }
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else if (tok[0] == "random") {
      if (kind != ModelKind::mdp) throw ParseError(line, "'random' is only allowed in mdp models");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        auto v = detail::parse_number(tok[i], line);
        if (v >= n) throw ValidationError("line " + std::to_string(line) + ": vertex out of range");
        random.push_back(static_cast<Vertex>(v));
      }
    } else {
      throw ParseError(line, "unknown directive '" + tok[0] + "'");
    }
  });
  if (!have_header) throw ParseError(1, "missing model header");
  return Model::build(kind, static_cast<std::size_t>(n), std::move(edges), std::move(random));
}

inline std::string serialize_model(const Model& model) {
  std::ostringstream out;
  out << to_string(model.kind()) << ' ' << model.n() << '\n';
  for (const auto& [u, v] : model.edges()) out << "e " << u << ' ' << v << '\n';
  auto random = model.random_vertices();
  if (!random.empty()) {
    out << "random";
    for (Vertex v : random) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace fairchk
