#pragma once

#include <cstdint>
#include <vector>

#include "edgegame/forest.hpp"

namespace edgegame {

// Random recursive tree: vertex i attaches to a uniformly chosen earlier
// vertex that still has spare degree. Labels and edge order are shuffled.
Forest random_tree(int32_t n, int32_t max_degree, uint64_t seed);

// Uniform labelled tree from a random Pruefer sequence (no degree cap).
Forest uniform_tree(int32_t n, uint64_t seed);

// Like random_tree, but the maximum degree is exactly max_degree when n allows.
Forest random_tree_exact_delta(int32_t n, int32_t max_degree, uint64_t seed);

// Path 0-1-...-(n-1) with edge i = (i, i+1).
Forest path_forest(int32_t n);

// Deletion orders over all edges of a forest.
std::vector<EdgeId> random_deletion_order(const Forest& forest, uint64_t seed);
// For a path: delete middle edges first, recursively, so every split is balanced.
std::vector<EdgeId> midpoint_deletion_order(int32_t edge_count);

}  // namespace edgegame
