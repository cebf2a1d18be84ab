#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "edgegame/alice_strategy.hpp"
#include "edgegame/game_state.hpp"

namespace edgegame {

enum class BobKind { kRandom, kSpoiler, kSkipper, kExhaustive };

std::string_view to_string(BobKind kind);
BobKind parse_bob_kind(std::string_view text);

struct BobPolicy {
  BobKind kind = BobKind::kRandom;
  uint64_t seed = 1;
  // random and skipper only; negative picks the policy default
  // (0.1 for random, 0.5 for skipper).
  double skip_probability = -1;
  int32_t budget = 8;  // exhaustive: largest edge count explored

  double effective_skip_probability() const {
    if (skip_probability >= 0) return skip_probability;
    return kind == BobKind::kSkipper ? 0.5 : kind == BobKind::kRandom ? 0.1 : 0.0;
  }
};

struct BobAction {
  bool skip = false;
  EdgeId edge = -1;
  Colour colour = kNoColour;

  static BobAction skip_turn() { return {true, -1, kNoColour}; }
  bool operator==(const BobAction&) const = default;
};

// Every legal Bob action: each uncoloured edge with each feasible colour
// (edge-major, ascending), then Skip when allowed.
std::vector<BobAction> bob_actions(const GameState& state);

// Spoiler ranking of one colouring, compared lexicographically.
struct SpoilerScore {
  int32_t second_base = 0;         // creates a component with two base nodes
  int32_t unmatched_increase = 0;  // raises the unmatched count of a relevant star
  int32_t new_colour = 0;          // colour not yet present in the component

  auto operator<=>(const SpoilerScore&) const = default;
};

SpoilerScore spoiler_score(const GameState& state, EdgeId e, Colour c);

// Seeded Bob. Stateful only through its random engine.
class BobPlayer {
 public:
  explicit BobPlayer(BobPolicy policy);

  // Throws kBobStuck when no colouring is legal and skipping is not allowed.
  BobAction next(const GameState& state);
  const BobPolicy& policy() const { return policy_; }

 private:
  BobAction random_move(const GameState& state);
  BobAction spoiler_move(const GameState& state);
  std::vector<EdgeId> spoiler_candidates(const GameState& state);
  bool may_skip(const GameState& state) const { return state.config().bob_may_skip; }

  BobPolicy policy_;
  std::mt19937_64 rng_;
};

struct ExhaustiveResult {
  bool all_alice_wins = true;
  int64_t positions = 0;        // distinct positions expanded
  int64_t bob_branches = 0;     // Bob actions explored
  int64_t alice_moves = 0;      // Alice moves checked
  int64_t invariant_failures = 0;
  int64_t stuck = 0;
  std::string first_failure;
};

// Alice's strategy against every Bob reply, memoised on the colouring, the
// player to move and the relative order of component labels (the only
// history the strategy looks at). Checks, after every Alice move, (S), (M),
// at most two unmatched edges and at most delta-1 colours per component, and
// after every Bob move at most delta colours; the x<=delta and x=3 checks after every move.
// Throws kBudgetExceeded when the forest has more than policy budget edges.
ExhaustiveResult exhaustive_bob(const GameState& start, const AliceOptions& alice, int32_t edge_cap = 8);

}  // namespace edgegame
