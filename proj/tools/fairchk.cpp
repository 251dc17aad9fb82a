#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fairchk/fairchk.hpp"

namespace {

using namespace fairchk;

enum class Command { scc, mec, streett_graph, streett_mdp };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  Command command = Command::scc;
  std::string model_file, pairs_file;
  std::string algorithm = "both";
  std::string threshold = "auto";
  std::string backend = "bitset";
  std::string scc_method = "skeleton";
  bool compare = false;
  bool check_oracle = false;
  bool debug_invariants = false;
  bool no_timing = false;
  std::string family;
  std::vector<std::size_t> sizes;
  std::size_t seeds = 1;
  std::uint64_t first_seed = 0;
  std::string csv_file;
  std::size_t k = 3;
  double density = 3.0;
  double random_fraction = 0.2;
  std::string pair_mode;
  bool bidirectional = false;
  unsigned jobs = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string format_set(const std::vector<Vertex>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
  return out + "}";
}

std::string format_sets(const std::vector<std::vector<Vertex>>& sets) {
  std::string out = "[";
  for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? "," : "") + format_set(sets[i]);
  return out + "]";
}

const char* command_name(Command c) {
  switch (c) {
    case Command::scc: return "scc";
    case Command::mec: return "mec";
    case Command::streett_graph: return "streett-graph";
    case Command::streett_mdp: return "streett-mdp";
  }
  return "";
}

RunOptions run_options(const Config& cfg) {
  RunOptions options;
  options.threshold = Threshold::parse(cfg.threshold);
  options.debug_invariants = cfg.debug_invariants;
  options.scc_method = cfg.scc_method == "forward-backward" ? SccMethod::forward_backward : SccMethod::skeleton;
  return options;
}

// For `scc`, "basic" is the forward/backward decomposition and "improved" the
// skeleton-based one.
template <SetBackend Backend>
RunReport run_once(Command command, bool improved, const Model& model, const StreettPairs& tp,
                   const RunOptions& options) {
  SymbolicManager<Backend> mgr(model);
  switch (command) {
    case Command::scc: {
      detail::Stopwatch clock;
      RunReport report;
      report.algorithm = improved ? "scc-skeleton" : "scc-forward-backward";
      auto sccs = all_sccs(mgr, mgr.universe(), improved ? SccMethod::skeleton : SccMethod::forward_backward);
      report.components = detail::sorted_ids(mgr, sccs);
      report.counters = mgr.snapshot_counters();
      report.wall_seconds = clock.seconds();
      return report;
    }
    case Command::mec: return improved ? mec_improved(mgr, options) : mec_basic(mgr, options);
    case Command::streett_graph:
      return improved ? streett_graph_improved(mgr, tp, options) : streett_graph_basic(mgr, tp, options);
    case Command::streett_mdp:
      return improved ? streett_mdp_improved(mgr, tp, options) : streett_mdp_basic(mgr, tp, options);
  }
  throw UsageError("unknown command");
}

RunReport run_algorithm(const Config& cfg, bool improved, const Model& model, const StreettPairs& tp) {
  auto options = run_options(cfg);
  if (cfg.backend == "obdd") return run_once<ObddBackend>(cfg.command, improved, model, tp, options);
  return run_once<BitsetBackend>(cfg.command, improved, model, tp, options);
}

// Whether the report agrees with the explicit reference.
bool matches_oracle(Command command, const Model& model, const StreettPairs& tp, const RunReport& report) {
  switch (command) {
    case Command::scc: {
      std::vector<Vertex> all(model.n());
      for (std::size_t v = 0; v < model.n(); ++v) all[v] = static_cast<Vertex>(v);
      return report.components == oracle::tarjan_scc(model, all);
    }
    case Command::mec: return report.components == oracle::explicit_mec(model);
    case Command::streett_graph: return report.winning == oracle::explicit_streett_graph(model, tp);
    case Command::streett_mdp: return report.winning == oracle::explicit_streett_mdp(model, tp);
  }
  return false;
}

void print_report(std::ostream& out, Command command, const RunReport& r, bool timing) {
  const auto& c = r.counters;
  out << "algorithm=" << r.algorithm << '\n';
  if (command == Command::scc) {
    out << "sccs=" << format_sets(r.components) << '\n';
  } else if (command == Command::mec) {
    out << "mecs=" << format_sets(r.components) << '\n';
  } else {
    out << "winning-set=" << format_set(r.winning) << '\n';
  }
  out << "steps=" << r.steps() << '\n';
  out << "preprocessing-steps=" << r.preprocessing_steps() << '\n';
  out << "pre=" << c.pre_ops << " post=" << c.post_ops << " cpre=" << c.cpre_ops << " set=" << c.set_ops
      << " cardinality=" << c.cardinality_ops << " pick=" << c.pick_ops << '\n';
  out << "lock-step-calls=" << r.stats.lock_step_calls << " scc-recomputations=" << r.stats.scc_recomputations
      << '\n';
  if (r.stats.invariant_checks) out << "invariant-checks=" << r.stats.invariant_checks << '\n';
  if (timing) out << "time=" << r.wall_seconds << '\n';
}

int run_single(const Config& cfg) {
  Model model = parse_model(read_file(cfg.model_file));
  StreettPairs tp;
  if (!cfg.pairs_file.empty()) tp = parse_pairs(read_file(cfg.pairs_file), model.n());
  if ((cfg.command == Command::streett_graph || cfg.command == Command::streett_mdp) && cfg.pairs_file.empty()) {
    throw UsageError("--pairs is required for " + std::string(command_name(cfg.command)));
  }

  bool all_match = true;
  for (bool improved : {false, true}) {
    if (improved && cfg.algorithm == "basic") continue;
    if (!improved && cfg.algorithm == "improved") continue;
    auto report = run_algorithm(cfg, improved, model, tp);
    print_report(std::cout, cfg.command, report, !cfg.no_timing);
    if (cfg.check_oracle) {
      bool match = matches_oracle(cfg.command, model, tp, report);
      std::cout << "oracle-match=" << (match ? "true" : "false") << '\n';
      all_match = all_match && match;
    }
  }
  if (!all_match) {
    std::cerr << "reproducer: fairchk " << command_name(cfg.command) << " --model " << cfg.model_file
              << (cfg.pairs_file.empty() ? "" : " --pairs " + cfg.pairs_file) << " --algorithm " << cfg.algorithm
              << " --threshold " << cfg.threshold << " --backend " << cfg.backend << " --check-oracle\n";
    return 2;
  }
  return 0;
}

// --- sweeps -------------------------------------------------------------------

struct Instance {
  std::size_t size = 0;
  std::uint64_t seed = 0;
  Model model;
  StreettPairs pairs;
};

Instance make_instance(const Config& cfg, std::size_t size, std::uint64_t seed) {
  Instance inst{size, seed, {}, {}};
  const std::size_t n = size;
  const auto m = std::min(n * n, static_cast<std::size_t>(std::llround(cfg.density * static_cast<double>(n))));
  const bool needs_mdp = cfg.command == Command::streett_mdp;
  if (cfg.family == "random") {
    if (needs_mdp) throw UsageError("streett-mdp needs the mdp-random family");
    inst.model = generate::random_graph(n, std::max(m, n), seed);
  } else if (cfg.family == "mdp-random") {
    inst.model = generate::random_mdp(n, std::max(m, n), cfg.random_fraction, seed);
  } else if (cfg.family == "chain-of-cycles") {
    if (needs_mdp) throw UsageError("streett-mdp needs the mdp-random family");
    auto [cycles, cycle_size] = generate::chain_shape(n);
    inst.model = generate::chain_of_cycles(cycles, cycle_size, cfg.bidirectional);
    if (cfg.pair_mode != "random") {
      auto mode = cfg.pair_mode == "cascade" ? generate::ChainPairs::cascade : generate::ChainPairs::per_cycle;
      inst.pairs = generate::chain_pairs(cycles, cycle_size, mode);
      return inst;
    }
  } else if (cfg.family == "grid") {
    if (needs_mdp) throw UsageError("streett-mdp needs the mdp-random family");
    auto rows = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n))));
    inst.model = generate::grid(rows, std::max<std::size_t>(1, n / rows));
  } else {
    throw UsageError("unknown family '" + cfg.family + "'");
  }
  inst.pairs = generate::random_pairs(inst.model.n(), cfg.k, seed);
  return inst;
}

struct Row {
  std::string line;
  std::optional<std::string> mismatch;
};

std::string reproducer(const Config& cfg, const Instance& inst) {
  std::ostringstream out;
  out << "reproducer: fairchk " << command_name(cfg.command) << " --family " << cfg.family << " --sizes "
      << inst.size << " --seeds 1 --first-seed " << inst.seed << " --k " << cfg.k << " --density " << cfg.density
      << " --random-fraction " << cfg.random_fraction << " --threshold " << cfg.threshold << " --backend "
      << cfg.backend << " --check-oracle";
  if (!cfg.pair_mode.empty()) out << " --pair-mode " << cfg.pair_mode;
  if (cfg.bidirectional) out << " --bidirectional";
  return out.str();
}

Row run_instance(const Config& cfg, std::size_t index, const Instance& inst) {
  auto basic = run_algorithm(cfg, false, inst.model, inst.pairs);
  auto improved = run_algorithm(cfg, true, inst.model, inst.pairs);
  Row row;
  if (cfg.check_oracle) {
    bool ok = matches_oracle(cfg.command, inst.model, inst.pairs, basic) &&
              matches_oracle(cfg.command, inst.model, inst.pairs, improved);
    if (!ok) row.mismatch = reproducer(cfg, inst);
  }
  auto time = [&](const RunReport& r) { return cfg.no_timing ? 0.0 : r.wall_seconds; };
  std::ostringstream out;
  out << index << ',' << cfg.family << ',' << inst.seed << ',' << inst.model.n() << ',' << inst.model.m() << ','
      << inst.pairs.k() << ',' << basic.steps() << ',' << improved.steps() << ',' << time(basic) << ','
      << time(improved) << ',' << basic.preprocessing_steps() << ',' << improved.preprocessing_steps() << ','
      << basic.counters.cpre_ops << ',' << improved.counters.cpre_ops << ',' << basic.counters.set_ops << ','
      << improved.counters.set_ops << ',' << improved.stats.lock_step_calls << ','
      << improved.stats.scc_recomputations;
  row.line = out.str();
  return row;
}

constexpr const char* kCsvHeader =
    "instance,family,seed,n,m,k,basic_steps,improved_steps,basic_time,improved_time,basic_prep_steps,"
    "improved_prep_steps,basic_cpre,improved_cpre,basic_set_ops,improved_set_ops,lock_step_calls,"
    "scc_recomputations";

int run_sweep(const Config& cfg) {
  if (cfg.sizes.empty()) throw UsageError("--family needs --sizes");
  std::vector<Instance> instances;
  for (std::size_t size : cfg.sizes)
    for (std::uint64_t s = 0; s < cfg.seeds; ++s) instances.push_back(make_instance(cfg, size, cfg.first_seed + s));

  std::vector<Row> rows(instances.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        rows[i] = run_instance(cfg, i, instances[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = instances.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::max(1U, cfg.jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  std::ofstream file;
  if (!cfg.csv_file.empty()) {
    file.open(cfg.csv_file);
    if (!file) throw IoError("cannot write " + cfg.csv_file);
  }
  std::ostream& out = cfg.csv_file.empty() ? std::cout : file;
  out << kCsvHeader << '\n';
  for (const auto& row : rows) out << row.line << '\n';
  out.flush();
  if (!out) throw IoError("failed writing CSV output");

  for (const auto& row : rows) {
    if (row.mismatch) {
      std::cerr << "oracle mismatch\n" << *row.mismatch << '\n';
      return 2;
    }
  }
  if (cfg.check_oracle) std::cerr << "oracle-match=true (" << rows.size() << " instances)\n";
  return 0;
}

void add_common_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--model", cfg.model_file, "model file");
  sub->add_option("--pairs", cfg.pairs_file, "Streett pairs file");
  sub->add_option("--algorithm", cfg.algorithm, "basic, improved or both")
      ->check(CLI::IsMember({"basic", "improved", "both"}));
  sub->add_option("--threshold", cfg.threshold, "auto, practical, inf or a positive integer");
  sub->add_option("--backend", cfg.backend, "set representation")->check(CLI::IsMember({"bitset", "obdd"}));
  sub->add_option("--scc-method", cfg.scc_method, "SCC subroutine")
      ->check(CLI::IsMember({"skeleton", "forward-backward"}));
  sub->add_flag("--compare", cfg.compare, "run basic and improved on generated instances, one CSV row each");
  sub->add_flag("--check-oracle", cfg.check_oracle, "compare every result with the explicit reference");
  sub->add_flag("--debug-invariants", cfg.debug_invariants, "assert the algorithm invariants while running");
  sub->add_flag("--no-timing", cfg.no_timing, "report zero wall time so output is reproducible");
  sub->add_option("--family", cfg.family, "random, chain-of-cycles, grid or mdp-random");
  sub->add_option("--sizes", cfg.sizes, "comma-separated vertex counts")->delimiter(',');
  sub->add_option("--seeds", cfg.seeds, "instances per size");
  sub->add_option("--first-seed", cfg.first_seed, "seed of the first instance");
  sub->add_option("--csv", cfg.csv_file, "write the CSV here instead of stdout");
  sub->add_option("--k", cfg.k, "number of random Streett pairs");
  sub->add_option("--density", cfg.density, "edges per vertex for random families");
  sub->add_option("--random-fraction", cfg.random_fraction, "share of random vertices for mdp-random");
  sub->add_option("--pair-mode", cfg.pair_mode, "pairs for chain-of-cycles: per-cycle, cascade or random")
      ->check(CLI::IsMember({"per-cycle", "cascade", "random"}));
  sub->add_flag("--bidirectional", cfg.bidirectional, "chain-of-cycles with cycle edges in both directions");
  sub->add_option("--jobs", cfg.jobs, "instances run concurrently");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic algorithms for Streett objectives and MEC decomposition"};
  app.require_subcommand(1);
  Config cfg;
  const std::pair<const char*, Command> commands[] = {
      {"scc", Command::scc},
      {"mec", Command::mec},
      {"streett-graph", Command::streett_graph},
      {"streett-mdp", Command::streett_mdp},
  };
  const char* descriptions[] = {
      "SCC decomposition",
      "maximal end-component decomposition",
      "winning set of a graph with a Streett objective",
      "almost-sure winning set of an MDP with a Streett objective",
  };
  for (std::size_t i = 0; i < 4; ++i) {
    auto* sub = app.add_subcommand(commands[i].first, descriptions[i]);
    add_common_options(sub, cfg);
    Command c = commands[i].second;
    sub->callback([&cfg, c] { cfg.command = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!cfg.family.empty()) {
      if (cfg.pair_mode.empty() && cfg.family == "chain-of-cycles") cfg.pair_mode = "per-cycle";
      return run_sweep(cfg);
    }
    if (cfg.compare) throw UsageError("--compare needs --family and --sizes");
    if (cfg.model_file.empty()) throw UsageError("give --model FILE or --family NAME");
    return run_single(cfg);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  }
}
