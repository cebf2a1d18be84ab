#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "edgegame/alice_strategy.hpp"
#include "edgegame/decremental_forest.hpp"
#include "edgegame/forest.hpp"

namespace edgegame {

// Constructive check of the strategy on every small tree.
struct ExhaustiveSummary {
  int64_t trees = 0;
  int64_t runs = 0;  // trees times first-player settings
  int64_t positions = 0;
  int64_t bob_branches = 0;
  int64_t alice_moves = 0;
  int64_t invariant_failures = 0;
  int64_t stuck = 0;
  bool all_alice_wins = true;
  std::string first_failure;
};

// Every tree with at most max_edges edges whose maximum degree is in
// `deltas`, k = delta + 1, both first movers.
ExhaustiveSummary verify_exhaustive(int32_t max_edges, const std::vector<int32_t>& deltas,
                                    bool bob_may_skip = true, const AliceOptions& alice = {},
                                    const std::function<void(const Forest&)>& on_tree = {});

struct DecrementalBench {
  int32_t n = 0;
  DecrementalVariant variant = DecrementalVariant::kBaseline;
  std::string order;
  uint64_t relabels = 0;
  uint64_t traversal_steps = 0;
  int32_t clusters = 0;
  double seconds = 0;
  double baseline_bound = 0;   // n log2 n
  double two_level_bound = 0;  // 4 n log2 log2 n + 8 n
};

// Deletes every edge of a tree on n vertices. Order "random" uses a random
// tree with degrees at most max_degree and a random order; "adversarial"
// cuts a path at its midpoints so every split is balanced.
DecrementalBench bench_decremental(int32_t n, DecrementalVariant variant, const std::string& order,
                                   uint64_t seed, int32_t max_degree = 5);

}  // namespace edgegame
