#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fairchk/model.hpp"

namespace fairchk {

// One Streett pair (L, U): a play that visits L infinitely often must visit
// U infinitely often. Either side may be empty.
struct StreettPair {
  std::vector<Vertex> lower;
  std::vector<Vertex> upper;
  friend bool operator==(const StreettPair&, const StreettPair&) = default;
};

struct StreettPairs {
  std::vector<StreettPair> pairs;

  std::size_t k() const noexcept { return pairs.size(); }
  friend bool operator==(const StreettPairs&, const StreettPairs&) = default;
};

// Parses the pairs text format:
//   pairs <k>
//   L <i> <v>...    U <i> <v>...     (1 <= i <= k, repeated lines accumulate)
// Vertex lists come out sorted and deduplicated.
inline StreettPairs parse_pairs(std::string_view text, std::size_t n) {
  bool have_header = false;
  StreettPairs result;
  detail::for_each_line(text, [&](std::size_t line, const std::vector<std::string>& tok) {
    if (!have_header) {
      if (tok.size() != 2 || tok[0] != "pairs") throw ParseError(line, "expected header 'pairs <k>'");
      auto k = detail::parse_number(tok[1], line);
      if (k > 1'000'000) throw ParseError(line, "too many pairs");
      result.pairs.resize(static_cast<std::size_t>(k));
      have_header = true;
      return;
    }
    if (tok[0] != "L" && tok[0] != "U") throw ParseError(line, "expected 'L <i> ...' or 'U <i> ...'");
    if (tok.size() < 2) throw ParseError(line, "missing pair index");
    auto i = detail::parse_number(tok[1], line);
    if (i < 1 || i > result.k()) {
      throw ValidationError("line " + std::to_string(line) + ": pair index " + std::to_string(i) +
                            " outside 1.." + std::to_string(result.k()));
    }
    auto& side = tok[0] == "L" ? result.pairs[i - 1].lower : result.pairs[i - 1].upper;
    for (std::size_t t = 2; t < tok.size(); ++t) {
      auto v = detail::parse_number(tok[t], line);
      if (v >= n) throw ValidationError("line " + std::to_string(line) + ": vertex out of range");
      side.push_back(static_cast<Vertex>(v));
    }
  });
  if (!have_header) throw ParseError(1, "missing pairs header");
  for (auto& p : result.pairs) {
    for (auto* side : {&p.lower, &p.upper}) {
      std::sort(side->begin(), side->end());
      side->erase(std::unique(side->begin(), side->end()), side->end());
    }
  }
  return result;
}

inline std::string serialize_pairs(const StreettPairs& tp) {
  std::ostringstream out;
  out << "pairs " << tp.k() << '\n';
  for (std::size_t i = 0; i < tp.k(); ++i) {
    out << "L " << i + 1;
    for (Vertex v : tp.pairs[i].lower) out << ' ' << v;
    out << "\nU " << i + 1;
    for (Vertex v : tp.pairs[i].upper) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace fairchk
