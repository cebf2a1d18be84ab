#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgegame/adversaries.hpp"
#include "edgegame/alice_strategy.hpp"
#include "edgegame/game_state.hpp"

namespace edgegame {

enum class Outcome { kOngoing, kAliceWins, kBobWins, kAborted };

std::string_view to_string(Outcome o);

// AliceWins iff nothing is uncoloured; BobWins iff some uncoloured edge has
// no feasible colour left. Scans the whole state.
Outcome winner(const GameState& state);

struct MoveRecord {
  int32_t move_no = 0;
  Player player = Player::kAlice;
  bool skip = false;
  EdgeId edge = -1;
  Colour colour = kNoColour;
  std::optional<StrategyDecision> decision;  // Alice moves only
  InvariantReport report;
};

// Worst values seen across a game, for the acceptance checks.
struct GameStats {
  uint64_t max_alice_lca_queries = 0;   // per Alice move, including the Bob move before it
  uint64_t max_alice_leaf_ops = 0;
  int32_t max_colours_after_alice = 0;
  int32_t max_colours_after_bob = 0;
  int64_t alice_invariant_failures = 0;  // (S), (M) or unmatched cap broken after an Alice move
  int64_t star_size_failures = 0;
  int64_t three_leaf_failures = 0;
  int32_t max_leaf_list_length = 0;
  int32_t alice_moves = 0;
  int32_t bob_moves = 0;
  int32_t bob_skips = 0;
};

struct GameTrace {
  // Header.
  uint64_t forest_hash = 0;
  int32_t vertices = 0;
  int32_t edges = 0;
  int32_t delta = 0;
  int32_t k = 0;
  Player first_player = Player::kAlice;
  bool bob_may_skip = true;
  std::string bob_policy;
  std::string alice_policy;
  // Body.
  std::vector<MoveRecord> moves;
  Outcome outcome = Outcome::kOngoing;
  std::vector<EdgeId> stuck_edges;  // dead edges when Bob wins
  std::string diagnostics;          // set when aborted
  GameStats stats;
};

// One game driven move by move. The batch harness and the HTTP service both
// use it.
class GameEngine {
 public:
  GameEngine(std::shared_ptr<const Forest> forest, std::shared_ptr<const LcaIndex> lca, GameConfig config,
             AliceOptions alice = {}, bool record_moves = true);

  const GameState& state() const { return state_; }
  const GameTrace& trace() const { return trace_; }
  Outcome outcome() const { return trace_.outcome; }
  bool finished() const { return trace_.outcome != Outcome::kOngoing; }

  // Alice's strategic move. On StrategyStuck or an unsupported forest the game
  // is marked aborted and the error is kept in the diagnostics.
  const MoveRecord& alice_move();
  // Validates and applies Bob's action; throws GameError on an illegal one
  // (state unchanged).
  const MoveRecord& bob_move(const BobAction& action);

 private:
  const MoveRecord& record(MoveRecord rec, const SplitOutcome* split);
  void settle();

  GameState state_;
  AliceOptions alice_;
  bool record_moves_;
  GameTrace trace_;
  MoveRecord last_;
  uint64_t cycle_queries_ = 0;
  uint64_t cycle_leaf_ops_ = 0;
};

struct PlayOptions {
  bool record_moves = true;
  AliceOptions alice;
};

GameTrace play(std::shared_ptr<const Forest> forest, GameConfig config, const BobPolicy& bob,
               const PlayOptions& options = {});
GameTrace play(std::shared_ptr<const Forest> forest, std::shared_ptr<const LcaIndex> lca, GameConfig config,
               const BobPolicy& bob, const PlayOptions& options = {});

// Re-applies recorded moves from the initial position and returns the
// invariant report after each one.
std::vector<InvariantReport> replay(std::shared_ptr<const Forest> forest, GameConfig config,
                                    const std::vector<MoveRecord>& moves);

}  // namespace edgegame
