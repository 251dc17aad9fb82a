#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "fairchk/errors.hpp"
#include "fairchk/model.hpp"
#include "fairchk/scc.hpp"
#include "fairchk/symbolic.hpp"

namespace fairchk {

// When the improved algorithms recompute SCCs instead of running a lock-step
// search: once |H_S| + |T_S| (or |T_S| for MECs) reaches the threshold.
struct Threshold {
  enum class Kind {
    automatic,  // the asymptotically optimal choice
    practical,  // ceil(2 log2 n)
    fixed,
    never,      // always take the lock-step path
  };
  Kind kind = Kind::automatic;
  std::size_t value = 0;

  static Threshold automatic() { return {}; }
  static Threshold practical() { return {Kind::practical, 0}; }
  static Threshold fixed(std::size_t v) {
    if (v == 0) throw UsageError("threshold must be positive");
    return {Kind::fixed, v};
  }
  static Threshold never() { return {Kind::never, 0}; }

  static Threshold parse(const std::string& text) {
    if (text == "auto") return automatic();
    if (text == "practical") return practical();
    if (text == "inf" || text == "never") return never();
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(text, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != text.size() || text.empty() || text[0] == '-' || v == 0) {
      throw UsageError("threshold must be auto, practical, inf or a positive integer, got '" + text + "'");
    }
    return fixed(static_cast<std::size_t>(v));
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::automatic: return "auto";
      case Kind::practical: return "practical";
      case Kind::fixed: return std::to_string(value);
      case Kind::never: return "inf";
    }
    return "";
  }
};

namespace detail {
inline double log2_at_least_one(std::size_t n) { return n < 2 ? 1.0 : std::log2(static_cast<double>(n)); }

inline std::size_t ceil_positive(double x) {
  auto v = static_cast<std::size_t>(std::ceil(x - 1e-9));
  return v == 0 ? 1 : v;
}

inline std::size_t resolve(const Threshold& t, std::size_t n, double automatic) {
  switch (t.kind) {
    case Threshold::Kind::automatic: return ceil_positive(automatic);
    case Threshold::Kind::practical: return ceil_positive(2.0 * log2_at_least_one(n));
    case Threshold::Kind::fixed: return t.value;
    case Threshold::Kind::never: return std::numeric_limits<std::size_t>::max();
  }
  return 1;
}
}  // namespace detail

// ceil(sqrt(m / log2 n)) for the Streett algorithms.
inline std::size_t streett_threshold(const Threshold& t, std::size_t n, std::size_t m) {
  return detail::resolve(t, n, std::sqrt(static_cast<double>(m) / detail::log2_at_least_one(n)));
}

// ceil(sqrt(m)) for MEC decomposition.
inline std::size_t mec_threshold(const Threshold& t, std::size_t n, std::size_t m) {
  return detail::resolve(t, n, std::sqrt(static_cast<double>(m)));
}

struct RunOptions {
  Threshold threshold;
  bool debug_invariants = false;
  SccMethod scc_method = SccMethod::skeleton;
};

struct RunStats {
  std::uint64_t iterations = 0;       // candidates taken from the queue
  std::uint64_t lock_step_calls = 0;
  std::uint64_t lock_step_rounds = 0;
  std::uint64_t scc_recomputations = 0;
  std::uint64_t invariant_checks = 0;
};

// Outcome of one algorithm run on a fresh manager. `counters` covers the
// whole run; `preprocessing` the initial SCC or MEC decomposition, which the
// headline step figure leaves out.
struct RunReport {
  std::string algorithm;
  std::vector<Vertex> winning;                 // Streett algorithms
  std::vector<std::vector<Vertex>> components;  // MEC decomposition
  StepCounters counters;
  StepCounters preprocessing;
  double wall_seconds = 0.0;
  RunStats stats;

  std::uint64_t steps() const { return (counters - preprocessing).headline(); }
  std::uint64_t preprocessing_steps() const { return preprocessing.headline(); }
};

namespace detail {
class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};
}  // namespace detail

}  // namespace fairchk
