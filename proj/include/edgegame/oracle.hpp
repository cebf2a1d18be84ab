#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgegame/forest.hpp"
#include "edgegame/game_state.hpp"

namespace edgegame {

enum class Winner { kAlice, kBob };

std::string_view to_string(Winner w);

struct SolveConfig {
  int32_t k = 1;
  Player first_player = Player::kAlice;
  bool bob_may_skip = true;
  int32_t edge_cap = 9;
  int32_t threads = 1;  // >1 splits the first move across workers
};

struct SolveStats {
  int64_t positions = 0;
};

// Exact value of the edge-colouring game under optimal play. Alice colours
// on every turn; Bob colours or, when allowed, skips. A position with an
// uncolourable edge is lost for Alice. Throws kCapExceeded above edge_cap.
Winner solve(const Forest& forest, const SolveConfig& config, SolveStats* stats = nullptr);

// Same, from a partial colouring (0 = uncoloured) with the given player to move.
Winner solve_from(const Forest& forest, std::span<const Colour> colouring, Player to_move,
                  const SolveConfig& config, SolveStats* stats = nullptr);

// Smallest k for which Alice wins with either player moving first.
int32_t game_chromatic_index(const Forest& forest, bool bob_may_skip, int32_t edge_cap = 9);

// AHU encoding of the tree rooted at its centre (the smaller encoding for
// bicentral trees). Two trees are isomorphic iff their forms are equal.
std::string canonical_form(const Forest& tree);

// Every unlabelled tree on exactly n vertices, once each, in a canonical
// labelling; optional filter on the exact maximum degree.
void for_each_tree(int32_t n, std::optional<int32_t> delta_filter,
                   const std::function<void(const Forest&)>& visit);

// All trees on 1..n_max vertices (n_max <= 12 unless forced).
std::vector<Forest> enumerate_trees(int32_t n_max, std::optional<int32_t> delta_filter = std::nullopt);

}  // namespace edgegame
