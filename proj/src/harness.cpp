#include "edgegame/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include "edgegame/adversaries.hpp"
#include "edgegame/oracle.hpp"
#include "edgegame/random_trees.hpp"

namespace edgegame {

ExhaustiveSummary verify_exhaustive(int32_t max_edges, const std::vector<int32_t>& deltas, bool bob_may_skip,
                                    const AliceOptions& alice, const std::function<void(const Forest&)>& on_tree) {
  ExhaustiveSummary sum;
  for (int32_t n = 2; n <= max_edges + 1; ++n) {
    for_each_tree(n, std::nullopt, [&](const Forest& tree) {
      if (std::find(deltas.begin(), deltas.end(), tree.delta()) == deltas.end()) return;
      if (on_tree) on_tree(tree);
      ++sum.trees;
      auto forest = std::make_shared<const Forest>(tree);
      for (Player first : {Player::kAlice, Player::kBob}) {
        GameConfig cfg;
        cfg.k = tree.delta() + 1;
        cfg.first_player = first;
        cfg.bob_may_skip = bob_may_skip;
        GameState start(forest, cfg);
        const ExhaustiveResult r = exhaustive_bob(start, alice, max_edges);
        ++sum.runs;
        sum.positions += r.positions;
        sum.bob_branches += r.bob_branches;
        sum.alice_moves += r.alice_moves;
        sum.invariant_failures += r.invariant_failures;
        sum.stuck += r.stuck;
        if (!r.all_alice_wins || r.invariant_failures > 0 || r.stuck > 0) {
          if (sum.first_failure.empty()) {
            sum.first_failure = "first=" + std::string(to_string(first)) + " tree:\n" + tree.to_text() +
                                (r.first_failure.empty() ? "" : "\n" + r.first_failure);
          }
          sum.all_alice_wins = sum.all_alice_wins && r.all_alice_wins;
        }
      }
    });
  }
  return sum;
}

DecrementalBench bench_decremental(int32_t n, DecrementalVariant variant, const std::string& order, uint64_t seed,
                                   int32_t max_degree) {
  DecrementalBench b;
  b.n = n;
  b.variant = variant;
  b.order = order;
  const bool adversarial = order == "adversarial";
  if (!adversarial && order != "random") throw GameError(ErrorCode::kParse, "order must be random or adversarial");
  const Forest tree = adversarial ? path_forest(n) : random_tree(n, max_degree, seed);
  const std::vector<EdgeId> seq =
      adversarial ? midpoint_deletion_order(tree.edge_count()) : random_deletion_order(tree, seed ^ 0x5bd1e995);
  const auto t0 = std::chrono::steady_clock::now();
  DecrementalForest d(tree, variant);
  for (EdgeId e : seq) d.delete_edge(e);
  b.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  b.relabels = d.relabel_count();
  b.traversal_steps = d.traversal_steps();
  b.clusters = d.macro_node_count();
  const double lg = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;
  b.baseline_bound = n * lg;
  b.two_level_bound = 4.0 * n * (lg > 1 ? std::log2(lg) : 0.0) + 8.0 * n;
  return b;
}

}  // namespace edgegame
