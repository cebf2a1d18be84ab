#include "edgegame/game_engine.hpp"

namespace edgegame {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kOngoing: return "ongoing";
    case Outcome::kAliceWins: return "AliceWins";
    case Outcome::kBobWins: return "BobWins";
    case Outcome::kAborted: return "Aborted";
  }
  return "?";
}

Outcome winner(const GameState& state) {
  bool any = false;
  for (EdgeId e = 0; e < state.forest().edge_count(); ++e) {
    if (state.is_coloured(e)) continue;
    any = true;
    if (state.feasible_mask(e) == 0) return Outcome::kBobWins;
  }
  return any ? Outcome::kOngoing : Outcome::kAliceWins;
}

GameEngine::GameEngine(std::shared_ptr<const Forest> forest, std::shared_ptr<const LcaIndex> lca,
                       GameConfig config, AliceOptions alice, bool record_moves)
    : state_(std::move(forest), std::move(lca), config), alice_(alice), record_moves_(record_moves) {
  trace_.forest_hash = state_.forest().hash();
  trace_.vertices = state_.forest().vertex_count();
  trace_.edges = state_.forest().edge_count();
  trace_.delta = state_.delta();
  trace_.k = state_.k();
  trace_.first_player = state_.config().first_player;
  trace_.bob_may_skip = state_.config().bob_may_skip;
  trace_.alice_policy = std::string("strategy/") + std::string(to_string(alice.priority));
  settle();
}

void GameEngine::settle() {
  if (trace_.outcome != Outcome::kOngoing) return;
  if (state_.uncoloured_count() == 0) {
    trace_.outcome = Outcome::kAliceWins;
  } else if (state_.dead_edge_count() > 0) {
    trace_.outcome = Outcome::kBobWins;
    trace_.stuck_edges.assign(state_.dead_edges().begin(), state_.dead_edges().end());
  }
}

const MoveRecord& GameEngine::record(MoveRecord rec, const SplitOutcome* split) {
  std::vector<ComponentLabel> touched;
  if (split != nullptr) {
    if (split->side_u >= 0) touched.push_back(split->side_u);
    if (split->side_v >= 0 && split->side_v != split->side_u) touched.push_back(split->side_v);
  }
  rec.report = state_.report(touched);
  GameStats& st = trace_.stats;
  const InvariantReport& r = rec.report;
  st.star_size_failures += r.star_size_violations > 0;
  st.three_leaf_failures += r.three_leaf_violations > 0;
  st.max_leaf_list_length = std::max(st.max_leaf_list_length, state_.max_leaf_list_length());
  if (rec.player == Player::kAlice) {
    ++st.alice_moves;
    st.max_colours_after_alice = std::max(st.max_colours_after_alice, r.max_colours_present);
    st.alice_invariant_failures += !r.alice_invariants_hold();
  } else {
    ++st.bob_moves;
    st.bob_skips += rec.skip;
    st.max_colours_after_bob = std::max(st.max_colours_after_bob, r.max_colours_present);
  }
  last_ = std::move(rec);
  if (record_moves_) trace_.moves.push_back(last_);
  settle();
  return last_;
}

const MoveRecord& GameEngine::alice_move() {
  if (state_.to_move() != Player::kAlice) {
    throw GameError(ErrorCode::kParse, "it is not Alice's turn");
  }
  const uint64_t q0 = LcaIndex::query_count();
  const uint64_t l0 = state_.leaf_list_ops();
  MoveRecord rec;
  rec.move_no = state_.move_count();
  rec.player = Player::kAlice;
  StrategyDecision d;
  try {
    d = choose_move(state_, alice_);
  } catch (const GameError& err) {
    trace_.outcome = Outcome::kAborted;
    trace_.diagnostics = std::string(to_string(err.code())) + ": " + err.what();
    last_ = rec;
    return last_;
  }
  const SplitOutcome split = state_.play_colour(d.edge, d.colour);
  cycle_queries_ += LcaIndex::query_count() - q0;
  cycle_leaf_ops_ += state_.leaf_list_ops() - l0;
  trace_.stats.max_alice_lca_queries = std::max(trace_.stats.max_alice_lca_queries, cycle_queries_);
  trace_.stats.max_alice_leaf_ops = std::max(trace_.stats.max_alice_leaf_ops, cycle_leaf_ops_);
  cycle_queries_ = 0;
  cycle_leaf_ops_ = 0;
  rec.edge = d.edge;
  rec.colour = d.colour;
  rec.decision = d;
  return record(std::move(rec), &split);
}

const MoveRecord& GameEngine::bob_move(const BobAction& action) {
  if (state_.to_move() != Player::kBob) {
    throw GameError(ErrorCode::kParse, "it is not Bob's turn");
  }
  MoveRecord rec;
  rec.move_no = state_.move_count();
  rec.player = Player::kBob;
  if (action.skip) {
    if (!state_.config().bob_may_skip) {
      throw GameError(ErrorCode::kParse, "skipping is not allowed in this game");
    }
    state_.play_skip();
    rec.skip = true;
    return record(std::move(rec), nullptr);
  }
  const uint64_t q0 = LcaIndex::query_count();
  const uint64_t l0 = state_.leaf_list_ops();
  const SplitOutcome split = state_.play_colour(action.edge, action.colour);
  cycle_queries_ += LcaIndex::query_count() - q0;
  cycle_leaf_ops_ += state_.leaf_list_ops() - l0;
  rec.edge = action.edge;
  rec.colour = action.colour;
  return record(std::move(rec), &split);
}

GameTrace play(std::shared_ptr<const Forest> forest, GameConfig config, const BobPolicy& bob,
               const PlayOptions& options) {
  auto lca = std::make_shared<const LcaIndex>(*forest);
  return play(std::move(forest), std::move(lca), config, bob, options);
}

GameTrace play(std::shared_ptr<const Forest> forest, std::shared_ptr<const LcaIndex> lca, GameConfig config,
               const BobPolicy& bob, const PlayOptions& options) {
  GameEngine engine(std::move(forest), std::move(lca), config, options.alice, options.record_moves);
  BobPlayer bob_player(bob);
  while (!engine.finished()) {
    if (engine.state().to_move() == Player::kAlice) {
      engine.alice_move();
    } else {
      BobAction a;
      try {
        a = bob_player.next(engine.state());
      } catch (const GameError& err) {
        GameTrace t = engine.trace();
        t.outcome = Outcome::kAborted;
        t.diagnostics = std::string(to_string(err.code())) + ": " + err.what();
        t.bob_policy = std::string(to_string(bob.kind));
        return t;
      }
      engine.bob_move(a);
    }
  }
  GameTrace t = engine.trace();
  t.bob_policy = std::string(to_string(bob.kind)) + "/seed=" + std::to_string(bob.seed);
  return t;
}

std::vector<InvariantReport> replay(std::shared_ptr<const Forest> forest, GameConfig config,
                                    const std::vector<MoveRecord>& moves) {
  GameState state(std::move(forest), config);
  std::vector<InvariantReport> out;
  out.reserve(moves.size());
  for (const MoveRecord& m : moves) {
    std::vector<ComponentLabel> touched;
    if (m.skip) {
      state.play_skip();
    } else {
      const SplitOutcome split = state.play_colour(m.edge, m.colour);
      if (split.side_u >= 0) touched.push_back(split.side_u);
      if (split.side_v >= 0 && split.side_v != split.side_u) touched.push_back(split.side_v);
    }
    out.push_back(state.report(touched));
  }
  return out;
}

}  // namespace edgegame
