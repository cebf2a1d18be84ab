#include "doctest.h"
#include "edgegame/adversaries.hpp"
#include "edgegame/game_engine.hpp"
#include "edgegame/random_trees.hpp"

using namespace edgegame;

namespace {

std::shared_ptr<const Forest> tree(const char* text) { return std::make_shared<const Forest>(load_forest(text)); }

}  // namespace

TEST_CASE("policy names") {
  for (BobKind k : {BobKind::kRandom, BobKind::kSpoiler, BobKind::kSkipper, BobKind::kExhaustive}) {
    CHECK(parse_bob_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_bob_kind("nobody"), GameError);
}

TEST_CASE("seeded random Bob is replayable") {
  GameState st(tree("3\n0 1\n1 2"), GameConfig{.k = 3});
  BobPlayer a(BobPolicy{.kind = BobKind::kRandom, .seed = 42, .skip_probability = 0});
  BobPlayer b(BobPolicy{.kind = BobKind::kRandom, .seed = 42, .skip_probability = 0});
  for (int i = 0; i < 20; ++i) {
    const BobAction x = a.next(st), y = b.next(st);
    CHECK(x == y);
    CHECK(!x.skip);
    CHECK((st.feasible_mask(x.edge) >> x.colour & 1));
  }
}

TEST_CASE("skipper with probability one always skips and loses") {
  auto f = std::make_shared<const Forest>(random_tree_exact_delta(200, 4, 3));
  const BobPolicy bob{.kind = BobKind::kSkipper, .seed = 3, .skip_probability = 1.0};
  GameState st(f, GameConfig{});
  BobPlayer p(bob);
  CHECK(p.next(st).skip);
  const GameTrace t = play(f, GameConfig{}, bob);
  CHECK(t.outcome == Outcome::kAliceWins);
  CHECK(t.stats.bob_skips == t.stats.bob_moves);
  CHECK(t.stats.alice_moves == f->edge_count());
}

TEST_CASE("skipper and random differ by default") {
  CHECK(BobPolicy{.kind = BobKind::kSkipper}.effective_skip_probability() >
        BobPolicy{.kind = BobKind::kRandom}.effective_skip_probability());
}

TEST_CASE("Bob with no legal colouring and no skips is stuck") {
  GameState st(tree("4\n0 1\n1 2\n2 3"), GameConfig{.k = 2, .bob_may_skip = false});
  st.apply_colouring(0, 1);
  st.apply_colouring(2, 2);
  BobPlayer p(BobPolicy{.kind = BobKind::kRandom, .seed = 1});
  try {
    p.next(st);
    FAIL("expected BobStuck");
  } catch (const GameError& e) {
    CHECK(e.code() == ErrorCode::kBobStuck);
  }
}

TEST_CASE("exhaustive action lists") {
  GameState one(tree("2\n0 1"), GameConfig{.k = 2});
  CHECK(bob_actions(one).size() == 3);  // two colours and a skip

  GameState p3(tree("3\n0 1\n1 2"), GameConfig{.k = 4});
  p3.apply_colouring(0, 1);
  const auto acts = bob_actions(p3);
  REQUIRE(acts.size() == 4);
  for (int i = 0; i < 3; ++i) {
    CHECK(acts[i].edge == 1);
    CHECK(acts[i].colour == i + 2);
  }
  CHECK(acts[3].skip);

  GameState noskip(tree("3\n0 1\n1 2"), GameConfig{.k = 4, .bob_may_skip = false});
  CHECK(bob_actions(noskip).size() == 8);
}

TEST_CASE("spoiler prefers a second base node") {
  // Star at 0 with three coloured edges; colouring at vertex 4 next to the
  // existing leaf at 4 makes it a base node.
  auto f = tree("10\n0 1\n0 2\n0 3\n0 5\n1 4\n4 6\n4 7\n6 8\n7 9");
  GameState st(f, GameConfig{.k = 5});
  st.apply_colouring(1, 1);
  st.apply_colouring(2, 2);
  st.apply_colouring(3, 3);
  st.apply_colouring(7, 1);  // 6-8
  const SpoilerScore s = spoiler_score(st, 8, 2);  // 7-9
  CHECK(s.second_base == 1);
  const SpoilerScore plain = spoiler_score(st, 4, 4);  // 1-4
  CHECK(plain < s);
}

TEST_CASE("exhaustive Bob on small trees") {
  auto k14 = tree("5\n0 1\n0 2\n0 3\n0 4");
  const ExhaustiveResult r = exhaustive_bob(GameState(k14, GameConfig{}), AliceOptions{});
  CHECK(r.all_alice_wins);
  CHECK(r.invariant_failures == 0);
  CHECK(r.positions > 0);

  auto big = std::make_shared<const Forest>(random_tree(12, 4, 1));
  CHECK_THROWS_AS(exhaustive_bob(GameState(big, GameConfig{}), AliceOptions{}), GameError);
}
