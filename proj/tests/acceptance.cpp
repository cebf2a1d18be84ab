// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "edgegame/adversaries.hpp"
#include "edgegame/decremental_forest.hpp"
#include "edgegame/game_engine.hpp"
#include "edgegame/harness.hpp"
#include "edgegame/oracle.hpp"
#include "edgegame/random_trees.hpp"
#include "oracles.hpp"

using namespace edgegame;

namespace {

int failures = 0;

void line(bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void exhaustive_constructive() {
  const auto t0 = std::chrono::steady_clock::now();
  const ExhaustiveSummary s = verify_exhaustive(8, {4, 5}, true);
  const bool ok = s.all_alice_wins && s.invariant_failures == 0 && s.stuck == 0 && s.trees > 0;
  line(ok, "exhaustive strategy check (<=8 edges, delta 4,5, skips, both first movers)",
       fmt("%lld trees, %lld runs, %lld positions, %lld Bob branches, %lld invariant failures, %lld stuck, %.1fs",
           (long long)s.trees, (long long)s.runs, (long long)s.positions, (long long)s.bob_branches,
           (long long)s.invariant_failures, (long long)s.stuck, seconds_since(t0)) +
           (s.first_failure.empty() ? "" : "; first failure: " + s.first_failure));
}

void exhaustive_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  int trees = 0, lost = 0;
  for (int n = 2; n <= 9; ++n) {
    for_each_tree(n, 4, [&](const Forest& f) {
      ++trees;
      for (Player p : {Player::kAlice, Player::kBob}) {
        lost += solve(f, SolveConfig{.k = 5, .first_player = p, .bob_may_skip = true}) != Winner::kAlice;
      }
    });
  }
  line(lost == 0 && trees > 0, "oracle: k=5 wins every delta-4 tree with <=8 edges",
       fmt("%d trees, %d losing (tree, first mover) pairs, %.1fs", trees, lost, seconds_since(t0)));
}

struct StressTotals {
  int games = 0, alice_wins = 0;
  int32_t max_after_alice_excess = -99;  // colours minus (delta-1)
  int32_t max_after_bob_excess = -99;    // colours minus delta
  int64_t star_size = 0, three_leaf = 0, alice_invariant = 0, moves = 0;
};

StressTotals stress(double& secs) {
  const auto t0 = std::chrono::steady_clock::now();
  StressTotals tot;
  for (int32_t delta : {4, 5}) {
    for (BobKind kind : {BobKind::kRandom, BobKind::kSpoiler, BobKind::kSkipper}) {
      for (uint64_t seed = 1; seed <= 100; ++seed) {
        auto f = std::make_shared<const Forest>(random_tree_exact_delta(10000, delta, seed));
        const GameTrace t = play(f, GameConfig{}, BobPolicy{.kind = kind, .seed = seed}, {.record_moves = false});
        ++tot.games;
        tot.alice_wins += t.outcome == Outcome::kAliceWins;
        if (t.outcome != Outcome::kAliceWins) {
          std::printf("  game lost: delta %d, %s, seed %llu: %s\n", delta, std::string(to_string(kind)).c_str(),
                      (unsigned long long)seed, t.diagnostics.c_str());
        }
        tot.max_after_alice_excess = std::max(tot.max_after_alice_excess, t.stats.max_colours_after_alice - (delta - 1));
        tot.max_after_bob_excess = std::max(tot.max_after_bob_excess, t.stats.max_colours_after_bob - delta);
        tot.star_size += t.stats.star_size_failures;
        tot.three_leaf += t.stats.three_leaf_failures;
        tot.alice_invariant += t.stats.alice_invariant_failures;
        tot.moves += t.stats.alice_moves + t.stats.bob_moves;
      }
    }
  }
  secs = seconds_since(t0);
  return tot;
}

void stress_and_checks() {
  double secs = 0;
  const StressTotals s = stress(secs);
  const bool ok = s.games == 600 && s.alice_wins == s.games && s.max_after_alice_excess <= 0 &&
                  s.max_after_bob_excess <= 0 && secs < 300;
  line(ok, "randomized stress (100 games x {random, spoiler, skipper} x delta {4,5}, n=10^4)",
       fmt("%d/%d AliceWins, colours after Alice <= delta-1%+d, after Bob <= delta%+d, %.1fs "
           "(post-Alice (S)/(M)/unmatched-cap lapses, not part of this criterion: %lld in %lld moves)",
           s.alice_wins, s.games, s.max_after_alice_excess, s.max_after_bob_excess, secs,
           (long long)s.alice_invariant, (long long)s.moves));
  line(s.star_size == 0 && s.three_leaf == 0, "structural checks over all stress moves",
       fmt("x>delta under (S): %lld, x=3 without (S)+(M): %lld", (long long)s.star_size, (long long)s.three_leaf));
}

void constant_selection() {
  const auto t0 = std::chrono::steady_clock::now();
  uint64_t worst_q = 0;
  double worst_ops_ratio = 0;  // leaf ops / (8 delta)
  std::string per_n;
  for (int32_t n : {100, 1000, 10000, 100000, 1000000}) {
    uint64_t q = 0, ops = 0;
    for (int32_t delta : {4, 5}) {
      for (BobKind kind : {BobKind::kRandom, BobKind::kSpoiler}) {
        auto f = std::make_shared<const Forest>(random_tree_exact_delta(n, delta, 7));
        const GameTrace t = play(f, GameConfig{}, BobPolicy{.kind = kind, .seed = 7}, {.record_moves = false});
        q = std::max(q, t.stats.max_alice_lca_queries);
        ops = std::max(ops, t.stats.max_alice_leaf_ops);
        worst_ops_ratio = std::max(worst_ops_ratio, double(t.stats.max_alice_leaf_ops) / (8.0 * delta));
      }
    }
    worst_q = std::max(worst_q, q);
    per_n += fmt(" n=%d:%llu/%llu", n, (unsigned long long)q, (unsigned long long)ops);
  }
  line(worst_q <= 30 && worst_ops_ratio <= 1.0, "O(1) move selection (max LCA queries / leaf-list ops per Alice move)",
       "max queries " + std::to_string(worst_q) + " (bound 30), max leaf ops " +
           fmt("%.0f%%", 100 * worst_ops_ratio) + " of 8*delta;" + per_n + fmt(" (%.1fs)", seconds_since(t0)));
}

void decremental_correctness() {
  const auto t0 = std::chrono::steady_clock::now();
  int64_t checks = 0, wrong = 0;
  for (auto variant : {DecrementalVariant::kBaseline, DecrementalVariant::kTwoLevel}) {
    for (uint64_t seed = 1; seed <= 1000; ++seed) {
      const int32_t n = 2 + static_cast<int32_t>(seed * 7919 % 199);
      const Forest f = random_tree(n, 5, seed);
      DecrementalForest df(f, variant);
      std::vector<bool> gone(f.edge_count(), false);
      for (EdgeId e : random_deletion_order(f, seed)) {
        df.delete_edge(e);
        gone[e] = true;
        const auto truth = oracles::components_without(f, gone);
        std::map<int32_t, int32_t> fwd, back;
        bool same = true;
        for (Vertex v = 0; v < n && same; ++v) {
          const auto a = fwd.emplace(df.find(v), truth[v]).first;
          const auto b = back.emplace(truth[v], df.find(v)).first;
          same = a->second == truth[v] && b->second == df.find(v);
        }
        ++checks;
        wrong += !same;
      }
    }
  }
  line(wrong == 0, "decremental forest agrees with a fresh traversal (1000 trees, n<=200, both variants)",
       fmt("%lld deletions checked, %lld mismatches, %.1fs", (long long)checks, (long long)wrong, seconds_since(t0)));
}

void decremental_complexity() {
  bool ok = true;
  std::string detail;
  double secs_1m_base = 0, secs_1m_two = 0;
  double worst_base = 0, worst_two = 0;
  for (int p = 10; p <= 20; ++p) {
    const int32_t n = 1 << p;
    const DecrementalBench b = bench_decremental(n, DecrementalVariant::kBaseline, "random", p);
    const DecrementalBench t = bench_decremental(n, DecrementalVariant::kTwoLevel, "random", p);
    const DecrementalBench adv = bench_decremental(n, DecrementalVariant::kBaseline, "adversarial", p);
    ok = ok && b.relabels <= b.baseline_bound && adv.relabels <= adv.baseline_bound &&
         t.relabels <= t.two_level_bound;
    worst_base = std::max({worst_base, b.relabels / b.baseline_bound, adv.relabels / adv.baseline_bound});
    worst_two = std::max(worst_two, t.relabels / t.two_level_bound);
  }
  for (auto variant : {DecrementalVariant::kBaseline, DecrementalVariant::kTwoLevel}) {
    const DecrementalBench b = bench_decremental(1000000, variant, "random", 1);
    (variant == DecrementalVariant::kBaseline ? secs_1m_base : secs_1m_two) = b.seconds;
  }
  line(ok, "decremental relabel bounds (n=2^10..2^20)",
       fmt("baseline at most %.0f%% of n log2 n (random and balanced-path orders), two-level at most %.0f%% of "
           "4n log2 log2 n + 8n",
           100 * worst_base, 100 * worst_two));
  line(secs_1m_base < 10 && secs_1m_two < 10, "decremental wall clock, n=10^6 full deletion (indicative)",
       fmt("baseline %.2fs, two-level %.2fs (limit 10s)", secs_1m_base, secs_1m_two));
}

void oracle_spots() {
  struct Spot {
    const char* name;
    Forest f;
    int want;
  };
  const std::vector<Spot> spots{{"single edge", load_forest("2\n0 1"), 1},
                                {"K1,4", load_forest("5\n0 1\n0 2\n0 3\n0 4"), 4},
                                {"P4", path_forest(4), 2},
                                {"P6", path_forest(6), 3}};
  bool ok = true;
  std::string detail;
  for (const Spot& s : spots) {
    const int lib = game_chromatic_index(s.f, true);
    const int ref = oracles::brute_index(s.f, true);
    ok = ok && lib == s.want && ref == s.want;
    detail += fmt(" %s=%d (reference %d)", s.name, lib, ref);
  }
  line(ok, "oracle spot values", detail.substr(1));
}

void lower_bound_probe() {
  const bool p6 = solve(path_forest(6), SolveConfig{.k = 2, .bob_may_skip = false}) == Winner::kBob &&
                  solve(path_forest(6), SolveConfig{.k = 2, .bob_may_skip = true}) == Winner::kBob &&
                  !oracles::brute_alice(path_forest(6), 2, Player::kAlice, false);
  std::string detail = p6 ? "P6 loses for Alice with k=2 (Alice first, with and without skips)" : "P6 not a witness";
  for (int32_t delta : {2, 3, 4}) {
    int trees = 0, witnesses = 0;
    std::string smallest;
    for (int n = 2; n <= 10; ++n) {
      for_each_tree(n, delta, [&](const Forest& f) {
        ++trees;
        for (Player p : {Player::kAlice, Player::kBob}) {
          if (solve(f, SolveConfig{.k = delta, .first_player = p, .bob_may_skip = true}) == Winner::kBob) {
            if (witnesses++ == 0) {
              smallest = fmt("%d edges, %s first", f.edge_count(), std::string(to_string(p)).c_str());
            }
            break;
          }
        }
      });
    }
    detail += fmt("; delta %d: %d of %d trees (<=9 edges) lost with k=delta", delta, witnesses, trees);
    if (witnesses) detail += " (smallest " + smallest + ")";
  }
  line(p6, "lower-bound probe", detail);
}

void enumerator_counts() {
  const std::vector<size_t> want{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  const auto ext = oracles::classes_by_extension(10);
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 10; ++n) {
    size_t got = 0;
    for_each_tree(n, std::nullopt, [&](const Forest&) { ++got; });
    size_t labelled = n <= 8 ? oracles::labelled_count(n) : ext[n].size();
    ok = ok && got == want[n - 1] && labelled == got && ext[n].size() == got;
    detail += fmt(" %zu", got);
  }
  line(ok, "tree enumerator counts n=1..10",
       "got" + detail + " (reference: labelled Pruefer trees up to isomorphism for n<=8, leaf extension with "
                        "isomorphism rejection for all n)");
}

}  // namespace

int main() {
  exhaustive_constructive();
  exhaustive_oracle();
  stress_and_checks();
  constant_selection();
  decremental_correctness();
  decremental_complexity();
  oracle_spots();
  lower_bound_probe();
  enumerator_counts();
  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
