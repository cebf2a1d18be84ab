#include <sstream>

#include "doctest.h"
#include "edgegame/game_engine.hpp"
#include "edgegame/random_trees.hpp"
#include "edgegame/trace_json.hpp"

using namespace edgegame;

namespace {

std::shared_ptr<const Forest> tree(const char* text) { return std::make_shared<const Forest>(load_forest(text)); }

const PlayOptions kAnyDelta{.alice = {.allow_any_delta = true}};

}  // namespace

TEST_CASE("winner") {
  GameState full(tree("3\n0 1\n1 2"), GameConfig{.k = 2});
  full.apply_colouring(0, 1);
  full.apply_colouring(1, 2);
  CHECK(winner(full) == Outcome::kAliceWins);

  GameState p4(tree("4\n0 1\n1 2\n2 3"), GameConfig{.k = 2});
  p4.apply_colouring(0, 1);
  p4.apply_colouring(2, 2);
  CHECK(winner(p4) == Outcome::kBobWins);

  GameState empty(tree("3"), GameConfig{.k = 1});
  CHECK(winner(empty) == Outcome::kAliceWins);

  GameState open(tree("3\n0 1\n1 2"), GameConfig{.k = 2});
  CHECK(winner(open) == Outcome::kOngoing);
}

TEST_CASE("single edge, one colour") {
  const GameTrace t = play(tree("2\n0 1"), GameConfig{.k = 1}, BobPolicy{}, kAnyDelta);
  CHECK(t.outcome == Outcome::kAliceWins);
  REQUIRE(t.moves.size() == 1);
  CHECK(t.moves[0].player == Player::kAlice);
}

TEST_CASE("empty forest is won at once") {
  const GameTrace t = play(tree("4"), GameConfig{.k = 1}, BobPolicy{}, kAnyDelta);
  CHECK(t.outcome == Outcome::kAliceWins);
  CHECK(t.moves.empty());
}

TEST_CASE("K1,4 with four colours") {
  for (BobKind kind : {BobKind::kRandom, BobKind::kSpoiler, BobKind::kSkipper}) {
    for (Player first : {Player::kAlice, Player::kBob}) {
      const GameTrace t =
          play(tree("5\n0 1\n0 2\n0 3\n0 4"), GameConfig{.k = 4, .first_player = first}, BobPolicy{.kind = kind});
      CHECK(t.outcome == Outcome::kAliceWins);
    }
  }
}

TEST_CASE("Bob moving first and without skips") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto f = std::make_shared<const Forest>(random_tree_exact_delta(400, 4 + seed % 2, seed));
    const GameTrace t = play(f, GameConfig{.first_player = Player::kBob, .bob_may_skip = false},
                             BobPolicy{.kind = BobKind::kSpoiler, .seed = seed});
    CHECK(t.outcome == Outcome::kAliceWins);
    REQUIRE(!t.moves.empty());
    CHECK(t.moves[0].player == Player::kBob);
    CHECK(t.stats.bob_skips == 0);
  }
}

TEST_CASE("illegal Bob action leaves the engine untouched") {
  auto f = tree("5\n0 1\n0 2\n0 3\n0 4");
  GameEngine g(f, std::make_shared<const LcaIndex>(*f), GameConfig{});
  const MoveRecord& a = g.alice_move();
  const EdgeId taken = a.edge;
  const Colour c = a.colour;
  const EdgeId other = taken == 0 ? 1 : 0;
  CHECK_THROWS_AS(g.bob_move(BobAction{false, other, c}), GameError);
  CHECK_THROWS_AS(g.bob_move(BobAction{false, taken, 5}), GameError);
  CHECK(g.trace().moves.size() == 1);
  CHECK(g.state().to_move() == Player::kBob);
}

TEST_CASE("a forest of several trees") {
  auto f = tree("12\n0 1\n0 2\n0 3\n0 4\n5 6\n6 7\n6 8\n6 9\n6 10\n7 11");
  const GameTrace t = play(f, GameConfig{}, BobPolicy{.kind = BobKind::kSpoiler, .seed = 3});
  CHECK(t.outcome == Outcome::kAliceWins);
  CHECK(t.delta == 5);
}

TEST_CASE("replay reproduces every report") {
  auto f = std::make_shared<const Forest>(random_tree_exact_delta(300, 4, 11));
  const GameTrace t = play(f, GameConfig{}, BobPolicy{.kind = BobKind::kRandom, .seed = 11});
  const auto reports = replay(f, GameConfig{}, t.moves);
  REQUIRE(reports.size() == t.moves.size());
  for (size_t i = 0; i < reports.size(); ++i) REQUIRE(reports[i] == t.moves[i].report);
  // Same seed, same game.
  const GameTrace again = play(f, GameConfig{}, BobPolicy{.kind = BobKind::kRandom, .seed = 11});
  REQUIRE(again.moves.size() == t.moves.size());
  for (size_t i = 0; i < t.moves.size(); ++i) {
    CHECK(again.moves[i].edge == t.moves[i].edge);
    CHECK(again.moves[i].colour == t.moves[i].colour);
  }
}

TEST_CASE("trace JSON round-trip") {
  auto f = std::make_shared<const Forest>(random_tree_exact_delta(80, 5, 2));
  const GameTrace t = play(f, GameConfig{}, BobPolicy{.kind = BobKind::kSkipper, .seed = 2});
  std::stringstream io;
  write_trace(io, t);
  const LoadedTrace back = read_trace(io);
  REQUIRE(back.moves.size() == t.moves.size());
  for (size_t i = 0; i < t.moves.size(); ++i) {
    CHECK(back.moves[i].player == t.moves[i].player);
    CHECK(back.moves[i].skip == t.moves[i].skip);
    CHECK(back.moves[i].edge == t.moves[i].edge);
    CHECK(back.moves[i].colour == t.moves[i].colour);
    CHECK(back.moves[i].report == t.moves[i].report);
  }
  CHECK(back.footer.at("outcome") == "AliceWins");
  const auto reports = replay(f, GameConfig{}, back.moves);
  CHECK(reports.back() == t.moves.back().report);
}

TEST_CASE("per-move work does not grow with n") {
  uint64_t worst_q = 0, worst_ops = 0;
  for (int32_t n : {100, 1000, 10000, 100000}) {
    auto f = std::make_shared<const Forest>(random_tree_exact_delta(n, 4, 5));
    const GameTrace t = play(f, GameConfig{}, BobPolicy{.kind = BobKind::kSpoiler, .seed = 5}, {.record_moves = false});
    CHECK(t.outcome == Outcome::kAliceWins);
    worst_q = std::max(worst_q, t.stats.max_alice_lca_queries);
    worst_ops = std::max(worst_ops, t.stats.max_alice_leaf_ops);
  }
  CHECK(worst_q <= 30);
  CHECK(worst_ops <= 8 * 4);
}
