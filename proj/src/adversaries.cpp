#include "edgegame/adversaries.hpp"

#include <algorithm>
#include <unordered_map>

namespace edgegame {

std::string_view to_string(BobKind kind) {
  switch (kind) {
    case BobKind::kRandom: return "random";
    case BobKind::kSpoiler: return "spoiler";
    case BobKind::kSkipper: return "skipper";
    case BobKind::kExhaustive: return "exhaustive";
  }
  return "?";
}

BobKind parse_bob_kind(std::string_view text) {
  if (text == "random") return BobKind::kRandom;
  if (text == "spoiler") return BobKind::kSpoiler;
  if (text == "skipper") return BobKind::kSkipper;
  if (text == "exhaustive") return BobKind::kExhaustive;
  throw GameError(ErrorCode::kParse, "unknown Bob policy '" + std::string(text) + "'");
}

std::vector<BobAction> bob_actions(const GameState& state) {
  std::vector<BobAction> out;
  for (EdgeId e = 0; e < state.forest().edge_count(); ++e) {
    if (state.is_coloured(e)) continue;
    ColourMask m = state.feasible_mask(e);
    while (m != 0) {
      const Colour c = __builtin_ctzll(m);
      m &= m - 1;
      out.push_back({false, e, c});
    }
  }
  if (state.config().bob_may_skip) out.push_back(BobAction::skip_turn());
  return out;
}

SpoilerScore spoiler_score(const GameState& state, EdgeId e, Colour c) {
  const Forest& forest = state.forest();
  const LcaIndex& lca = state.lca();
  const Edge& ed = forest.edge(e);
  const ComponentLabel comp = state.component_of_edge(e);
  const ComponentView& before = state.view(comp);
  // The side hanging below the edge in the rooted forest.
  const Vertex lower = lca.parent(ed.v) == ed.u ? ed.v : ed.u;
  const Vertex upper = ed.other(lower);

  std::vector<LeafCopy> low_side;
  std::vector<LeafCopy> up_side;
  for (const LeafCopy& l : state.coloured_leaves(comp)) {
    (lca.is_ancestor(lower, l.attach) ? low_side : up_side).push_back(l);
  }
  const bool low_active = state.live_degree(lower) > 1;
  const bool up_active = state.live_degree(upper) > 1;
  low_side.push_back({e, lower, c});
  up_side.push_back({e, upper, c});

  SpoilerScore score;
  score.new_colour = (before.colours >> c & 1) == 0;
  const int32_t before_unmatched = before.star_like && before.relevant ? before.unmatched_count() : 0;
  for (auto [side, active] : {std::pair{&low_side, low_active}, std::pair{&up_side, up_active}}) {
    if (!active) continue;
    ComponentView after = analyze(comp, *side, forest, lca);
    if (after.base_nodes.size() >= 2) score.second_base = 1;
    if (after.star_like && after.relevant && after.unmatched_count() > before_unmatched) {
      score.unmatched_increase = 1;
    }
  }
  return score;
}

BobPlayer::BobPlayer(BobPolicy policy) : policy_(policy), rng_(policy.seed) {}

BobAction BobPlayer::next(const GameState& state) {
  switch (policy_.kind) {
    case BobKind::kSpoiler: return spoiler_move(state);
    case BobKind::kSkipper:
    case BobKind::kRandom:
    case BobKind::kExhaustive: {
      const double p = policy_.effective_skip_probability();
      if (may_skip(state) && p > 0 && std::uniform_real_distribution<double>(0, 1)(rng_) < p) {
        return BobAction::skip_turn();
      }
      return random_move(state);
    }
  }
  return BobAction::skip_turn();
}

BobAction BobPlayer::random_move(const GameState& state) {
  const int32_t m = state.forest().edge_count();
  const int32_t live = state.uncoloured_count() - state.dead_edge_count();
  if (live > 0) {
    std::uniform_int_distribution<EdgeId> pick(0, m - 1);
    // Rejection sampling while the board is sparse, a scan once it is nearly full.
    for (int attempt = 0; attempt < 64; ++attempt) {
      const EdgeId e = pick(rng_);
      if (state.is_coloured(e)) continue;
      ColourMask f = state.feasible_mask(e);
      if (f == 0) continue;
      const int32_t count = popcount(f);
      int32_t nth = std::uniform_int_distribution<int32_t>(0, count - 1)(rng_);
      while (nth-- > 0) f &= f - 1;
      return {false, e, static_cast<Colour>(__builtin_ctzll(f))};
    }
    std::vector<EdgeId> open;
    for (EdgeId e = 0; e < m; ++e) {
      if (!state.is_coloured(e) && state.feasible_mask(e) != 0) open.push_back(e);
    }
    const EdgeId e = open[std::uniform_int_distribution<size_t>(0, open.size() - 1)(rng_)];
    ColourMask f = state.feasible_mask(e);
    int32_t nth = std::uniform_int_distribution<int32_t>(0, popcount(f) - 1)(rng_);
    while (nth-- > 0) f &= f - 1;
    return {false, e, static_cast<Colour>(__builtin_ctzll(f))};
  }
  if (may_skip(state)) return BobAction::skip_turn();
  throw GameError(ErrorCode::kBobStuck, "Bob has no legal colouring and may not skip");
}

std::vector<EdgeId> BobPlayer::spoiler_candidates(const GameState& state) {
  const Forest& forest = state.forest();
  std::vector<EdgeId> out;
  if (state.uncoloured_count() <= 48) {
    for (EdgeId e = 0; e < forest.edge_count(); ++e) {
      if (!state.is_coloured(e)) out.push_back(e);
    }
    return out;
  }
  const LcaIndex& lca = state.lca();
  std::vector<ComponentLabel> comps;
  auto take = [&](ComponentLabel c) {
    if (state.is_active(c) && std::find(comps.begin(), comps.end(), c) == comps.end()) comps.push_back(c);
  };
  take(state.last_split().side_u);
  take(state.last_split().side_v);
  for (Bucket b : {Bucket::kViolatesS, Bucket::kViolatesM, Bucket::kStarFragile, Bucket::kStarUnmatched,
                   Bucket::kStar, Bucket::kTwoLeaves}) {
    int taken = 0;
    for (ComponentLabel c : state.bucket(b)) {
      if (taken++ == 2) break;
      take(c);
    }
  }
  std::vector<Vertex> focus;
  for (ComponentLabel c : comps) {
    const ComponentView& view = state.view(c);
    auto leaves = state.coloured_leaves(c);
    for (const LeafCopy& l : leaves) {
      focus.push_back(l.attach);
      const Vertex hub = view.base >= 0 ? view.base : (leaves.size() == 2 ? leaves[0].attach : -1);
      if (hub >= 0 && hub != l.attach) {
        focus.push_back(lca.next_on_path(l.attach, hub));
        focus.push_back(lca.next_on_path(hub, l.attach));
      }
    }
    for (Vertex b : view.base_nodes) focus.push_back(b);
  }
  for (Vertex v : focus) {
    for (EdgeId e : state.uncoloured_incident(v)) {
      out.push_back(e);
      const Vertex w = forest.edge(e).other(v);
      for (EdgeId f : state.uncoloured_incident(w)) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::shuffle(out.begin(), out.end(), rng_);
  if (out.size() > 32) out.resize(32);
  std::uniform_int_distribution<EdgeId> pick(0, forest.edge_count() - 1);
  for (int i = 0; i < 4; ++i) {
    const EdgeId e = pick(rng_);
    if (!state.is_coloured(e)) out.push_back(e);
  }
  return out;
}

BobAction BobPlayer::spoiler_move(const GameState& state) {
  std::vector<EdgeId> edges = spoiler_candidates(state);
  std::shuffle(edges.begin(), edges.end(), rng_);
  BobAction best;
  SpoilerScore best_score{-1, -1, -1};
  for (EdgeId e : edges) {
    const ColourMask feasible = state.feasible_mask(e);
    if (feasible == 0) continue;
    // A colour new to the component and absent at its base is the most
    // damaging; also try the lowest feasible colour.
    const ComponentView& view = state.view(state.component_of_edge(e));
    const ColourMask at_base = view.base >= 0 ? state.colours_at(view.base) : 0;
    ColourMask fresh = feasible & ~view.colours & ~at_base;
    if (fresh == 0) fresh = feasible & ~view.colours;
    std::vector<Colour> tries;
    if (fresh != 0) {
      int32_t nth = std::uniform_int_distribution<int32_t>(0, popcount(fresh) - 1)(rng_);
      ColourMask f = fresh;
      while (nth-- > 0) f &= f - 1;
      tries.push_back(__builtin_ctzll(f));
    }
    const Colour low = __builtin_ctzll(feasible);
    if (tries.empty() || tries.front() != low) tries.push_back(low);
    for (Colour c : tries) {
      const SpoilerScore s = spoiler_score(state, e, c);
      if (s > best_score) {
        best_score = s;
        best = {false, e, c};
      }
    }
  }
  if (best.edge >= 0) return best;
  return random_move(state);
}

namespace {

class Verifier {
 public:
  Verifier(const AliceOptions& alice, ExhaustiveResult& result) : alice_(alice), result_(result) {}

  bool explore(const GameState& state) {
    if (state.uncoloured_count() == 0) return true;
    if (state.dead_edge_count() > 0) {
      fail(state, "dead edge reached");
      return false;
    }
    std::string k = key(state);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    ++result_.positions;
    const bool won = state.to_move() == Player::kAlice ? alice_turn(state) : bob_turn(state);
    memo_.emplace(std::move(k), won);
    return won;
  }

 private:
  bool alice_turn(const GameState& state) {
    GameState next = state;
    StrategyDecision d;
    try {
      d = choose_move(next, alice_);
    } catch (const GameError& err) {
      if (err.code() == ErrorCode::kStrategyStuck) ++result_.stuck;
      fail(state, err.what());
      return false;
    }
    next.play_colour(d.edge, d.colour);
    ++result_.alice_moves;
    const InvariantReport r = next.report({});
    const int32_t delta = next.delta();
    if (!r.alice_invariants_hold() || r.star_size_violations || r.three_leaf_violations ||
        r.max_colours_present > delta - 1) {
      ++result_.invariant_failures;
      fail(next, "invariant broken after Alice played " + std::string(to_string(d.case_tag)) +
                     " on edge " + std::to_string(d.edge));
      return false;
    }
    return explore(next);
  }

  bool bob_turn(const GameState& state) {
    for (const BobAction& a : bob_actions(state)) {
      ++result_.bob_branches;
      GameState next = state;
      if (a.skip) next.play_skip();
      else next.play_colour(a.edge, a.colour);
      const InvariantReport r = next.report({});
      if (r.star_size_violations || r.three_leaf_violations || r.max_colours_present > next.delta()) {
        ++result_.invariant_failures;
        fail(next, "invariant broken after Bob coloured edge " + std::to_string(a.edge));
        return false;
      }
      if (!explore(next)) return false;
    }
    return true;
  }

  static std::string key(const GameState& state) {
    std::vector<ComponentLabel> labels = state.active_components();
    std::string k;
    k.reserve(2 * state.colouring().size() + 1);
    k.push_back(state.to_move() == Player::kAlice ? 'A' : 'B');
    for (EdgeId e = 0; e < static_cast<EdgeId>(state.colouring().size()); ++e) {
      k.push_back(static_cast<char>(state.colour_of(e)));
      if (state.is_coloured(e)) continue;
      const ComponentLabel c = state.component_of_edge(e);
      k.push_back(static_cast<char>(std::lower_bound(labels.begin(), labels.end(), c) - labels.begin()));
    }
    return k;
  }

  void fail(const GameState& state, const std::string& why) {
    if (!result_.all_alice_wins) return;
    result_.all_alice_wins = false;
    std::string colours;
    for (Colour c : state.colouring()) colours += std::to_string(c) + ' ';
    result_.first_failure = why + " [colouring: " + colours + "]";
  }

  const AliceOptions& alice_;
  ExhaustiveResult& result_;
  std::unordered_map<std::string, bool> memo_;
};

}  // namespace

ExhaustiveResult exhaustive_bob(const GameState& start, const AliceOptions& alice, int32_t edge_cap) {
  if (start.forest().edge_count() > edge_cap) {
    throw GameError(ErrorCode::kBudgetExceeded, "exhaustive search capped at " + std::to_string(edge_cap) +
                                                    " edges, forest has " +
                                                    std::to_string(start.forest().edge_count()));
  }
  ExhaustiveResult result;
  Verifier verifier(alice, result);
  result.all_alice_wins = verifier.explore(start) && result.all_alice_wins;
  return result;
}

}  // namespace edgegame
