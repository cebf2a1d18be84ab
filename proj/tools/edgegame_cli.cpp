// Command-line frontend: simulation batches, exhaustive checks, the exact
// solver, enumeration, decremental benchmarks and the HTTP service.
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "edgegame/adversaries.hpp"
#include "edgegame/game_engine.hpp"
#include "edgegame/harness.hpp"
#include "edgegame/oracle.hpp"
#include "edgegame/random_trees.hpp"
#include "edgegame/service.hpp"
#include "edgegame/trace_json.hpp"

using namespace edgegame;

namespace {

constexpr int kUsageError = 2;
constexpr int kAnomaly = 3;

Player parse_player(const std::string& s) {
  if (s == "alice" || s == "Alice") return Player::kAlice;
  if (s == "bob" || s == "Bob") return Player::kBob;
  throw CLI::ValidationError("--first", "expected alice or bob");
}

struct SimulateArgs {
  std::string tree;
  int32_t random_n = 0;
  int32_t max_degree = 4;
  int32_t k = 0;
  std::string bob = "random";
  uint64_t seed = 1;
  int32_t games = 1;
  std::string trace;
  std::string first = "alice";
  bool no_skip = false;
  bool any_delta = false;
  double skip_probability = -1;
  std::string priority = "stars-first";
};

int run_simulate(const SimulateArgs& a) {
  BobPolicy bob;
  bob.kind = parse_bob_kind(a.bob);
  bob.skip_probability = a.skip_probability;
  AliceOptions alice;
  alice.priority = parse_priority(a.priority);
  alice.allow_any_delta = a.any_delta;
  GameConfig cfg;
  cfg.k = a.k;
  cfg.first_player = parse_player(a.first);
  cfg.bob_may_skip = !a.no_skip;
  std::shared_ptr<const Forest> fixed;
  if (!a.tree.empty()) fixed = std::make_shared<const Forest>(load_forest_file(a.tree));
  std::ofstream trace_out;
  if (!a.trace.empty()) trace_out.open(a.trace);
  int32_t alice_wins = 0, bob_wins = 0, aborted = 0;
  GameStats worst;
  for (int32_t g = 0; g < a.games; ++g) {
    bob.seed = a.seed + g;
    auto forest = fixed ? fixed
                        : std::make_shared<const Forest>(random_tree_exact_delta(a.random_n, a.max_degree, bob.seed));
    PlayOptions opts;
    opts.alice = alice;
    opts.record_moves = !a.trace.empty() || forest->edge_count() <= 2000;
    GameTrace t = play(forest, cfg, bob, opts);
    if (trace_out) write_trace(trace_out, t);
    alice_wins += t.outcome == Outcome::kAliceWins;
    bob_wins += t.outcome == Outcome::kBobWins;
    if (t.outcome == Outcome::kAborted) {
      ++aborted;
      const std::string dump = "anomaly_seed" + std::to_string(bob.seed) + ".jsonl";
      std::ofstream out(dump);
      write_trace(out, t);
      std::ofstream(dump + ".tree") << forest->to_text();
      std::cerr << "aborted: " << t.diagnostics << " (trace in " << dump << ")\n";
    }
    worst.max_alice_lca_queries = std::max(worst.max_alice_lca_queries, t.stats.max_alice_lca_queries);
    worst.max_alice_leaf_ops = std::max(worst.max_alice_leaf_ops, t.stats.max_alice_leaf_ops);
    worst.max_colours_after_alice = std::max(worst.max_colours_after_alice, t.stats.max_colours_after_alice);
    worst.max_colours_after_bob = std::max(worst.max_colours_after_bob, t.stats.max_colours_after_bob);
    worst.max_leaf_list_length = std::max(worst.max_leaf_list_length, t.stats.max_leaf_list_length);
    worst.alice_invariant_failures += t.stats.alice_invariant_failures;
    worst.star_size_failures += t.stats.star_size_failures;
    worst.three_leaf_failures += t.stats.three_leaf_failures;
    worst.alice_moves += t.stats.alice_moves;
    worst.bob_moves += t.stats.bob_moves;
    worst.bob_skips += t.stats.bob_skips;
  }
  Json summary{{"games", a.games},     {"alice_wins", alice_wins}, {"bob_wins", bob_wins},
               {"aborted", aborted},   {"bob", a.bob},             {"stats", to_json(worst)}};
  std::cout << summary.dump(2) << '\n';
  return aborted > 0 ? kAnomaly : 0;
}

std::vector<int32_t> parse_int_list(const std::string& s) {
  std::vector<int32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-colouring game on trees"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "play seeded games of the strategy against a Bob policy");
  auto* tree_opt = simulate->add_option("--tree", sim.tree, "tree file");
  simulate->add_option("--random-n", sim.random_n, "play on fresh random trees with this many vertices")
      ->excludes(tree_opt);
  simulate->add_option("--max-degree", sim.max_degree, "degree of the random trees");
  simulate->add_option("--k", sim.k, "number of colours (default delta+1)");
  simulate->add_option("--bob", sim.bob, "random|spoiler|skipper");
  simulate->add_option("--seed", sim.seed);
  simulate->add_option("--games", sim.games);
  simulate->add_option("--trace", sim.trace, "JSON-lines trace output");
  simulate->add_option("--first", sim.first, "alice|bob");
  simulate->add_flag("--no-skip", sim.no_skip);
  simulate->add_flag("--any-delta", sim.any_delta, "run the strategy outside maximum degree 4 or 5 (no guarantee)");
  simulate->add_option("--skip-probability", sim.skip_probability, "default 0.1 for random, 0.5 for skipper");
  simulate->add_option("--priority", sim.priority, "stars-first|small-first");

  int32_t max_edges = 8;
  std::string deltas = "4,5";
  bool exhaustive_no_skip = false;
  auto* verify = app.add_subcommand("verify-exhaustive", "strategy against every Bob line on all small trees");
  verify->add_option("--max-edges", max_edges);
  verify->add_option("--delta", deltas, "comma separated maximum degrees");
  verify->add_flag("--no-skip", exhaustive_no_skip);

  std::string tree_file;
  int32_t k = 0;
  bool skip = false;
  std::string first = "alice";
  int32_t cap = 9;
  int32_t threads = 1;
  auto* solve_cmd = app.add_subcommand("solve", "exact winner by minimax");
  solve_cmd->add_option("--tree", tree_file)->required();
  solve_cmd->add_option("--k", k)->required();
  solve_cmd->add_flag("--skip", skip, "Bob may skip");
  solve_cmd->add_option("--first", first, "alice|bob");
  solve_cmd->add_option("--cap", cap, "edge cap");
  solve_cmd->add_option("--threads", threads);

  auto* index_cmd = app.add_subcommand("index", "game chromatic index by minimax");
  index_cmd->add_option("--tree", tree_file)->required();
  index_cmd->add_flag("--skip", skip, "Bob may skip");
  index_cmd->add_option("--cap", cap, "edge cap");
  bool index_json = false;
  index_cmd->add_flag("--json", index_json, "print a JSON object instead of the bare number");

  int32_t enum_n = 10;
  int32_t enum_delta = 0;
  std::string enum_out;
  auto* enumerate = app.add_subcommand("enumerate", "count unlabelled trees");
  enumerate->add_option("--n", enum_n);
  enumerate->add_option("--delta", enum_delta, "exact maximum degree");
  enumerate->add_option("--out", enum_out, "write the trees to this file");

  int32_t bench_n = 1000;
  std::string variant = "baseline";
  std::string order = "random";
  uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench-decr", "delete every edge of a tree and count relabels");
  bench->add_option("--n", bench_n);
  bench->add_option("--variant", variant, "baseline|two-level");
  bench->add_option("--order", order, "random|adversarial");
  bench->add_option("--seed", bench_seed);

  std::string trace_file;
  auto* replay_cmd = app.add_subcommand("replay", "re-apply a trace and compare its invariant reports");
  replay_cmd->add_option("--tree", tree_file)->required();
  replay_cmd->add_option("--trace", trace_file)->required();

  int port = 8080;
  std::string host = "127.0.0.1";
  auto* serve_cmd = app.add_subcommand("serve", "JSON game service over HTTP");
  serve_cmd->add_option("--port", port);
  serve_cmd->add_option("--host", host);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*simulate) {
      if (sim.tree.empty() && sim.random_n <= 0) throw CLI::ValidationError("need --tree or --random-n");
      return run_simulate(sim);
    }
    if (*verify) {
      const ExhaustiveSummary s = verify_exhaustive(max_edges, parse_int_list(deltas), !exhaustive_no_skip);
      Json j{{"trees", s.trees},
             {"runs", s.runs},
             {"positions", s.positions},
             {"bob_branches", s.bob_branches},
             {"alice_moves", s.alice_moves},
             {"invariant_failures", s.invariant_failures},
             {"stuck", s.stuck},
             {"all_alice_wins", s.all_alice_wins}};
      const bool ok = s.all_alice_wins && s.invariant_failures == 0 && s.stuck == 0;
      std::cout << j.dump(2) << '\n'
                << (ok ? "all branches AliceWins" : "FAILURE: " + s.first_failure) << '\n';
      return ok ? 0 : kAnomaly;
    }
    if (*solve_cmd) {
      const Forest f = load_forest_file(tree_file);
      SolveConfig cfg{k, parse_player(first), skip, cap, threads};
      SolveStats stats;
      const Winner w = solve(f, cfg, &stats);
      std::cout << Json{{"tree", tree_file}, {"k", k}, {"winner", to_string(w)}, {"positions", stats.positions}}.dump()
                << '\n';
      return 0;
    }
    if (*index_cmd) {
      const Forest f = load_forest_file(tree_file);
      const int32_t chi = game_chromatic_index(f, skip, cap);
      if (index_json) std::cout << Json{{"tree", tree_file}, {"chi_g", chi}}.dump() << '\n';
      else std::cout << chi << '\n';
      return 0;
    }
    if (*enumerate) {
      std::optional<int32_t> filter;
      if (enum_delta > 0) filter = enum_delta;
      std::ofstream out;
      if (!enum_out.empty()) out.open(enum_out);
      Json counts = Json::array();
      int64_t total = 0;
      for (int32_t n = 1; n <= enum_n; ++n) {
        int64_t c = 0;
        for_each_tree(n, filter, [&](const Forest& f) {
          ++c;
          if (out) out << f.to_text() << '\n';
        });
        counts.push_back(c);
        total += c;
      }
      std::cout << Json{{"n", enum_n}, {"counts", counts}, {"total", total}}.dump() << '\n';
      return 0;
    }
    if (*bench) {
      const DecrementalBench b = bench_decremental(bench_n, parse_variant(variant), order, bench_seed);
      const double bound = b.variant == DecrementalVariant::kBaseline ? b.baseline_bound : b.two_level_bound;
      std::cout << Json{{"n", b.n},
                        {"variant", to_string(b.variant)},
                        {"order", b.order},
                        {"relabels", b.relabels},
                        {"traversal_steps", b.traversal_steps},
                        {"clusters", b.clusters},
                        {"seconds", b.seconds},
                        {"bound", bound},
                        {"within_bound", static_cast<double>(b.relabels) <= bound}}
                       .dump(2)
                << '\n';
      return 0;
    }
    if (*replay_cmd) {
      auto f = std::make_shared<const Forest>(load_forest_file(tree_file));
      std::ifstream in(trace_file);
      if (!in) throw GameError(ErrorCode::kParse, "cannot open " + trace_file);
      const LoadedTrace t = read_trace(in);
      GameConfig cfg;
      const Json& c = t.header.at("config");
      cfg.k = c.at("k").get<int32_t>();
      cfg.first_player = parse_player(c.at("first_player").get<std::string>());
      cfg.bob_may_skip = c.at("bob_may_skip").get<bool>();
      const auto reports = replay(f, cfg, t.moves);
      size_t mismatches = 0;
      for (size_t i = 0; i < reports.size(); ++i) mismatches += !(reports[i] == t.moves[i].report);
      std::cout << Json{{"moves", reports.size()}, {"mismatches", mismatches}}.dump() << '\n';
      return mismatches == 0 ? 0 : kAnomaly;
    }
    if (*serve_cmd) {
      GameService service;
      std::cerr << "listening on " << host << ":" << port << '\n';
      return serve(service, host, port);
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return kUsageError;
  } catch (const GameError& e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::kStrategyStuck ? kAnomaly : kUsageError;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
