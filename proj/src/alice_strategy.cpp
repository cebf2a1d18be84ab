#include "edgegame/alice_strategy.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "edgegame/star_model.hpp"

namespace edgegame {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kX0: return "X0";
    case CaseTag::kX1: return "X1";
    case CaseTag::kX2Path: return "X2_PATH";
    case CaseTag::kX2Adj: return "X2_ADJ";
    case CaseTag::kStarAllIncident: return "STAR_ALL_INCIDENT";
    case CaseTag::kStarTowardAb: return "STAR_TOWARD_AB";
    case CaseTag::kRepairS: return "REPAIR_S";
    case CaseTag::kRepairM: return "REPAIR_M";
    case CaseTag::kForced: return "FORCED";
  }
  return "?";
}

std::string_view to_string(AlicePriority p) {
  return p == AlicePriority::kStarsFirst ? "stars-first" : "small-first";
}

AlicePriority parse_priority(std::string_view text) {
  if (text == "stars-first") return AlicePriority::kStarsFirst;
  if (text == "small-first") return AlicePriority::kSmallCasesFirst;
  throw GameError(ErrorCode::kParse, "unknown priority '" + std::string(text) + "'");
}

ColourMask feasible_colours(const GameState& state, EdgeId e) { return state.feasible_mask(e); }

namespace {

Colour lowest(ColourMask m) { return m == 0 ? kNoColour : __builtin_ctzll(m); }

EdgeId edge_between(const Forest& forest, Vertex a, Vertex b) {
  for (EdgeId e : forest.incident(a)) {
    if (forest.edge(e).other(a) == b) return e;
  }
  return -1;
}

EdgeId first_uncoloured_at(const GameState& state, Vertex v) {
  auto live = state.uncoloured_incident(v);
  return live.empty() ? -1 : *std::min_element(live.begin(), live.end());
}

// Among the allowed colours, the one shared by most of `remaining` (those
// leaves become matched once the colour sits at the base); ties -> smallest.
// Returns {colour, leaves matched}; colour 0 when nothing is allowed.
std::pair<Colour, int32_t> best_matching_colour(ColourMask allowed,
                                                std::span<const LeafCopy> remaining) {
  Colour best = lowest(allowed);
  int32_t best_hits = 0;
  for (const LeafCopy& l : remaining) {
    if (!(allowed >> l.colour & 1)) continue;
    int32_t hits = 0;
    for (const LeafCopy& r : remaining) hits += r.colour == l.colour;
    if (hits > best_hits || (hits == best_hits && l.colour < best)) {
      best = l.colour;
      best_hits = hits;
    }
  }
  return {best, best == kNoColour ? 0 : best_hits};
}

[[noreturn]] void stuck(const GameState& state, EdgeId e, ComponentLabel c) {
  throw GameError(ErrorCode::kStrategyStuck,
                  "no feasible colour for edge " + std::to_string(e) + " in component " +
                      std::to_string(c) + " after move " + std::to_string(state.move_count()));
}

// A scored move. The first three score entries are hard criteria; among the
// moves best on those, one whose star Bob cannot break in a single move is
// preferred, then the remaining entries decide. Ties keep input order.
template <size_t N>
struct Candidate {
  std::array<int32_t, N> score;
  EdgeId edge;
  Colour colour;
  int32_t tag;  // caller data
};

template <size_t N, class Fragile>
const Candidate<N>& choose(std::vector<Candidate<N>>& cands, Fragile&& fragile) {
  std::stable_sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) { return x.score < y.score; });
  auto hard = [](const auto& c) { return std::array<int32_t, 3>{c.score[0], c.score[1], c.score[2]}; };
  for (const auto& c : cands) {
    if (hard(c) != hard(cands.front())) break;
    if (!fragile(c)) return c;
  }
  return cands.front();
}

// Any uncoloured edge at the base, not just the one towards ab, may be the
// better move: its colour can match leaves on other branches, and cutting a
// branch drops that branch's leaves. Each (edge, colour) pair is scored on the
// star it leaves behind; the move from the case analysis wins ties.
StrategyDecision refine_at_base(const GameState& state, const ComponentView& view, StrategyDecision d) {
  const LcaIndex& lca = state.lca();
  const Forest& forest = state.forest();
  const Vertex v = view.base;
  const auto leaves = state.coloured_leaves(view.label);
  const int32_t gamma = view.gamma + 1;
  const int32_t limit = std::max(3 - gamma, 0);
  ColourMask at_base = 0;
  for (const LeafCopy& l : leaves) {
    if (l.attach == v) at_base |= ColourMask{1} << l.colour;
  }
  // Lexicographic: a side with more than delta-1 colours, (M) broken,
  // unmatched cap broken, then (lazily) a star Bob can break for good in one move,
  // unmatched left, unmatched left next to the base.
  auto score = [&](Vertex y, Colour c) {
    const bool down = lca.parent(y) == v;
    ColourMask kept = ColourMask{1} << c, cut = ColourMask{1} << c;
    int32_t left = 0, near = 0;
    for (const LeafCopy& l : leaves) {
      const bool beyond = l.attach != v && (down ? lca.is_ancestor(y, l.attach) : !lca.is_ancestor(v, l.attach));
      (beyond ? cut : kept) |= ColourMask{1} << l.colour;
      if (beyond || l.attach == v || l.colour == c || (at_base >> l.colour & 1)) continue;
      ++left;
      near += lca.parent(l.attach) == v || lca.parent(v) == l.attach;
    }
    // A side whose last free edge this was retires and cannot break anything.
    const int32_t over = (state.live_degree(v) > 1 && popcount(kept) > state.delta() - 1) +
                         (state.live_degree(y) > 1 && popcount(cut) > state.delta() - 1);
    return std::array<int32_t, 5>{over, view.relevant && left > limit, left > 2, left, near};
  };
  std::vector<Candidate<5>> cands;
  cands.push_back({score(forest.edge(d.edge).other(v), d.colour), d.edge, d.colour, 0});
  for (EdgeId f : state.uncoloured_incident(v)) {
    const Vertex y = forest.edge(f).other(v);
    for (ColourMask m = state.feasible_mask(f); m != 0; m &= m - 1) {
      const Colour c = __builtin_ctzll(m);
      if (f == d.edge && c == d.colour) continue;
      cands.push_back({score(y, c), f, c, 0});
    }
  }
  const auto& pick = choose(cands, [&](const Candidate<5>& cd) {
    if (!view.relevant) return false;
    return make_star_model(state, v, leaves, LeafCopy{cd.edge, v, cd.colour}, cd.edge, cd.colour).fragile();
  });
  const bool moved = pick.edge != d.edge || pick.colour != d.colour;
  d.edge = pick.edge;
  d.colour = pick.colour;
  if (moved) {
    const Vertex y = forest.edge(d.edge).other(v);
    const bool down = lca.parent(y) == v;
    d.target_edge = -1;
    d.path_length = 1;
    for (const LeafCopy& l : view.unmatched) {
      if (down ? lca.is_ancestor(y, l.attach) : !lca.is_ancestor(v, l.attach)) {
        d.target_edge = l.edge;
        d.path_length = lca.distance(v, l.attach);
        break;
      }
    }
  }
  return d;
}

// Colour the edge at the base on the way to one coloured leaf (sections on
// stars and on (M) repairs).
StrategyDecision toward_leaf(const GameState& state, const ComponentView& view, CaseTag tag) {
  const LcaIndex& lca = state.lca();
  const Vertex v = view.base;
  const ColourMask at_v = state.colours_at(v);
  const ColourMask full = state.full_mask();

  std::vector<LeafCopy> candidates;
  if (!view.unmatched.empty()) {
    candidates = view.unmatched;
  } else {
    for (const LeafCopy& l : view.matched) {
      if (l.attach != v) {
        candidates.push_back(l);
        break;  // matched is sorted by edge id
      }
    }
  }

  const LeafCopy* target = nullptr;
  int32_t best_left = INT32_MAX;
  std::vector<LeafCopy> rest;
  for (const LeafCopy& t : candidates) {
    rest.clear();
    for (const LeafCopy& u : view.unmatched) {
      if (u.edge != t.edge) rest.push_back(u);
    }
    // The first path vertex carries coloured edges only if it is the
    // attachment itself (it then holds just the target leaf).
    const bool adjacent = lca.parent(t.attach) == v || lca.parent(v) == t.attach;
    const ColourMask allowed = full & ~(at_v | (adjacent ? state.colours_at(t.attach) : 0));
    auto [colour, hits] = best_matching_colour(allowed, rest);
    if (colour == kNoColour) continue;
    const int32_t left = static_cast<int32_t>(rest.size()) - hits;
    if (left < best_left) {
      best_left = left;
      target = &t;
    }
  }
  if (target == nullptr) target = &candidates.front();

  StrategyDecision d;
  d.case_tag = tag;
  d.component = view.label;
  d.base = v;
  d.target_edge = target->edge;
  const Vertex w = lca.next_on_path(v, target->attach);
  d.edge = edge_between(state.forest(), v, w);
  d.path_length = lca.distance(v, target->attach);
  rest.clear();
  for (const LeafCopy& u : view.unmatched) {
    if (u.edge != target->edge) rest.push_back(u);
  }
  d.colour = best_matching_colour(state.feasible_mask(d.edge), rest).first;
  if (d.colour == kNoColour) stuck(state, d.edge, view.label);
  return refine_at_base(state, view, d);
}

// Two base nodes: cut the path between them next to one of the two ends. The
// case analysis cuts next to repair_base; cutting next to repair_target, or
// using another colour, is taken only when it leaves strictly better stars.
StrategyDecision repair_s(const GameState& state, const ComponentView& view) {
  const LcaIndex& lca = state.lca();
  const Forest& forest = state.forest();
  const Vertex a = view.repair_base;
  const Vertex b = view.repair_target;
  const Vertex a1 = lca.next_on_path(a, b);
  const Vertex b1 = a1 == b ? a : lca.next_on_path(b, a);
  const auto leaves = state.coloured_leaves(view.label);

  // Is t on y's side of the edge xy?
  auto beyond = [&](Vertex x, Vertex y, Vertex t) {
    return lca.parent(y) == x ? lca.is_ancestor(y, t) : !lca.is_ancestor(x, t);
  };
  // Score of one side: the star with base `base` holding `side` leaves plus
  // the new leaf {attach, c}.
  struct Side {
    int32_t over = 0, m = 0, r1 = 0, left = 0;
  };
  auto side_score = [&](Vertex base, auto&& on_side, Vertex attach, Colour c) {
    ColourMask at_base = attach == base ? ColourMask{1} << c : 0;
    ColourMask present = ColourMask{1} << c;
    int32_t gamma = attach == base;
    for (const LeafCopy& l : leaves) {
      if (!on_side(l.attach)) continue;
      present |= ColourMask{1} << l.colour;
      if (l.attach == base) {
        at_base |= ColourMask{1} << l.colour;
        ++gamma;
      }
    }
    Side sc;
    if (state.live_degree(attach) <= 1) return sc;  // nothing left to colour there
    auto count = [&](Vertex t, Colour col) {
      if (t == base || (at_base >> col & 1)) return;
      ++sc.left;
    };
    for (const LeafCopy& l : leaves) {
      if (on_side(l.attach)) count(l.attach, l.colour);
    }
    count(attach, c);
    sc.over = popcount(present) > state.delta() - 1;
    sc.m = forest.degree(base) == state.delta() && sc.left > std::max(3 - gamma, 0);
    sc.r1 = sc.left > 2;
    return sc;
  };
  auto score = [&](Vertex x, Vertex y, Vertex far_base, Colour c) {
    const Side near = side_score(x, [&](Vertex t) { return !beyond(x, y, t); }, x, c);
    const Side far = side_score(far_base, [&](Vertex t) { return beyond(x, y, t); }, y, c);
    return std::array<int32_t, 4>{near.over + far.over, near.m + far.m, near.r1 + far.r1, near.left + far.left};
  };
  auto fragile = [&](Vertex x, Vertex y, Vertex far_base, EdgeId e, Colour c) {
    std::vector<LeafCopy> near_side, far_side;
    for (const LeafCopy& l : leaves) (beyond(x, y, l.attach) ? far_side : near_side).push_back(l);
    if (forest.degree(x) == state.delta() &&
        make_star_model(state, x, near_side, LeafCopy{e, x, c}, e, c).fragile()) {
      return true;
    }
    return forest.degree(far_base) == state.delta() &&
           make_star_model(state, far_base, far_side, LeafCopy{e, y, c}, e, c).fragile();
  };

  StrategyDecision d;
  d.case_tag = CaseTag::kRepairS;
  d.component = view.label;
  d.base = a;
  d.target_vertex = b;
  d.edge = edge_between(forest, a, a1);
  d.path_length = lca.distance(a, b);
  d.colour = best_matching_colour(state.feasible_mask(d.edge), view.repair_unmatched).first;
  if (d.colour == kNoColour) stuck(state, d.edge, view.label);

  std::vector<Candidate<4>> cands;
  cands.push_back({score(a, a1, b, d.colour), d.edge, d.colour, 0});
  for (int end = 0; end < 2; ++end) {
    const Vertex x = end == 0 ? a : b;
    const Vertex y = end == 0 ? a1 : b1;
    const EdgeId e = edge_between(forest, x, y);
    for (ColourMask m = state.feasible_mask(e); m != 0; m &= m - 1) {
      const Colour c = __builtin_ctzll(m);
      if (e == d.edge && c == d.colour) continue;
      cands.push_back({score(x, y, end == 0 ? b : a, c), e, c, end});
    }
  }
  const auto& pick = choose(cands, [&](const Candidate<4>& cd) {
    const Vertex x = cd.tag == 0 ? a : b;
    const Vertex y = cd.tag == 0 ? a1 : b1;
    return fragile(x, y, cd.tag == 0 ? b : a, cd.edge, cd.colour);
  });
  d.edge = pick.edge;
  d.colour = pick.colour;
  d.base = pick.tag == 0 ? a : b;
  d.target_vertex = pick.tag == 0 ? b : a;
  if (pick.score[0] == 0) return d;

  // Every cut leaves an active side with too many colours. Colouring another
  // edge at one of the two base nodes first can match the offending leaf; it
  // is taken only when both parts stay within delta-1 colours and some cut on
  // the next turn would then be clean too.
  const int32_t cap = state.delta() - 1;
  auto over = [&](std::span<const LeafCopy> ls, Vertex p, Vertex q, Colour c, int32_t live_p, int32_t live_q) {
    ColourMask near_side = ColourMask{1} << c, far_side = ColourMask{1} << c;
    for (const LeafCopy& l : ls) (beyond(p, q, l.attach) ? far_side : near_side) |= ColourMask{1} << l.colour;
    return (live_p > 1 && popcount(near_side) > cap) + (live_q > 1 && popcount(far_side) > cap);
  };
  std::vector<LeafCopy> kept;
  for (const Vertex x : {a, b}) {
    const Vertex toward = x == a ? a1 : b1;
    for (EdgeId f : state.uncoloured_incident(x)) {
      const Vertex y = forest.edge(f).other(x);
      if (y == toward) continue;
      for (ColourMask m = state.feasible_mask(f); m != 0; m &= m - 1) {
        const Colour c = __builtin_ctzll(m);
        if (over(leaves, x, y, c, state.live_degree(x), state.live_degree(y)) > 0) continue;
        kept.clear();
        for (const LeafCopy& l : leaves) {
          if (!beyond(x, y, l.attach)) kept.push_back(l);
        }
        kept.push_back({f, x, c});
        bool clean_cut = false;
        for (int end = 0; end < 2 && !clean_cut; ++end) {
          const Vertex p = end == 0 ? a : b;
          const Vertex q = end == 0 ? a1 : b1;
          const EdgeId e = edge_between(forest, p, q);
          ColourMask next = state.feasible_mask(e);
          if (p == x || q == x) next &= ~(ColourMask{1} << c);
          const int32_t live_p = state.live_degree(p) - (p == x);
          const int32_t live_q = state.live_degree(q) - (q == x);
          for (; next != 0 && !clean_cut; next &= next - 1) {
            clean_cut = over(kept, p, q, __builtin_ctzll(next), live_p, live_q) == 0;
          }
        }
        if (!clean_cut) continue;
        d.edge = f;
        d.colour = c;
        d.base = x;
        d.target_vertex = x == a ? b : a;
        return d;
      }
    }
  }
  return d;
}

StrategyDecision star_move(const GameState& state, const ComponentView& view) {
  const bool all_at_base = view.matched.size() == static_cast<size_t>(view.gamma) && view.unmatched.empty();
  if (!all_at_base) return toward_leaf(state, view, CaseTag::kStarTowardAb);
  StrategyDecision d;
  d.case_tag = CaseTag::kStarAllIncident;
  d.component = view.label;
  d.base = view.base;
  d.edge = first_uncoloured_at(state, view.base);
  d.colour = lowest(state.feasible_mask(d.edge));
  if (d.colour == kNoColour) stuck(state, d.edge, view.label);
  return d;
}

StrategyDecision small_move(const GameState& state, ComponentLabel c) {
  const ComponentView& view = state.view(c);
  auto leaves = state.coloured_leaves(c);
  StrategyDecision d;
  d.component = c;
  if (view.x == 0) {
    d.case_tag = CaseTag::kX0;
    // An untouched tree keeps its initial label, which is its tree index.
    d.edge = state.first_edge_of_tree(c);
    d.colour = lowest(state.feasible_mask(d.edge));
  } else if (view.x == 1) {
    d.case_tag = CaseTag::kX1;
    d.base = leaves[0].attach;
    d.target_edge = leaves[0].edge;
    d.edge = first_uncoloured_at(state, leaves[0].attach);
    d.colour = lowest(state.feasible_mask(d.edge));
  } else {
    LeafCopy a = leaves[0];
    LeafCopy b = leaves[1];
    if (b.edge < a.edge) std::swap(a, b);
    if (a.attach == b.attach) {
      d.case_tag = CaseTag::kX2Adj;
      d.base = a.attach;
      d.edge = first_uncoloured_at(state, a.attach);
      d.colour = lowest(state.feasible_mask(d.edge));
    } else {
      const LcaIndex& lca = state.lca();
      d.case_tag = CaseTag::kX2Path;
      d.target_edge = a.edge;
      const EdgeId from_a = edge_between(state.forest(), a.attach, lca.next_on_path(a.attach, b.attach));
      const EdgeId from_b = edge_between(state.forest(), b.attach, lca.next_on_path(b.attach, a.attach));
      d.edge = std::min(from_a, from_b);
      d.base = d.edge == from_a ? a.attach : b.attach;
      d.path_length = lca.distance(a.attach, b.attach);
      const ColourMask feasible = state.feasible_mask(d.edge);
      const ColourMask fresh = feasible & ~view.colours;
      d.colour = lowest(fresh != 0 ? fresh : feasible);
    }
  }
  if (d.colour == kNoColour) stuck(state, d.edge, c);
  return d;
}

// An edge with a single feasible colour left, preferring one next to the last
// coloured edge; -1 when there is none.
EdgeId forced_edge(const GameState& state) {
  const auto& critical = state.critical_edges();
  if (critical.empty()) return -1;
  const EdgeId last = state.last_coloured_edge();
  if (last >= 0) {
    EdgeId best = -1;
    for (Vertex x : {state.forest().edge(last).u, state.forest().edge(last).v}) {
      for (EdgeId f : state.uncoloured_incident(x)) {
        if (critical.count(f) && (best < 0 || f < best)) best = f;
      }
    }
    if (best >= 0) return best;
  }
  return *critical.begin();
}

}  // namespace

StrategyDecision choose_move(const GameState& state, const AliceOptions& options) {
  if (state.uncoloured_count() == 0) {
    throw GameError(ErrorCode::kNoUncolouredEdge, "every edge is already coloured");
  }
  const int32_t delta = state.delta();
  if (!options.allow_any_delta && delta != 4 && delta != 5) {
    throw GameError(ErrorCode::kUnsupportedDelta,
                    "strategy covers maximum degree 4 or 5, forest has " + std::to_string(delta));
  }

  using B = Bucket;
  static constexpr std::array<B, 8> kStarsFirst = {B::kViolatesS,  B::kViolatesM,     B::kStarFragile,
                                                   B::kStarUnmatched, B::kStar,     B::kTwoLeaves,
                                                   B::kOneLeaf,     B::kNoLeaves};
  static constexpr std::array<B, 8> kSmallFirst = {B::kViolatesS, B::kViolatesM, B::kTwoLeaves,
                                                   B::kOneLeaf,   B::kNoLeaves,  B::kStarFragile,
                                                   B::kStarUnmatched, B::kStar};
  const auto& order = options.priority == AlicePriority::kStarsFirst ? kStarsFirst : kSmallFirst;
  auto serve = [&](B b, ComponentLabel c) {
    const ComponentView& view = state.view(c);
    switch (b) {
      case B::kViolatesS: return repair_s(state, view);
      case B::kViolatesM: return toward_leaf(state, view, CaseTag::kRepairM);
      case B::kStarFragile:
      case B::kStarUnmatched:
      case B::kStar: return star_move(state, view);
      default: return small_move(state, c);
    }
  };
  StrategyDecision d;
  bool found = false;
  // A violation left by the last move is the one the repair argument covers;
  // older ones (if any survived) wait. One that already holds too many
  // colours goes before everything else.
  const SplitOutcome& last = state.last_split();
  for (ComponentLabel side : {last.side_u, last.side_v}) {
    if (found || side < 0 || !state.is_active(side)) continue;
    const ComponentView& view = state.view(side);
    if (view.colours_present <= delta - 1) continue;
    for (B b : {B::kViolatesS, B::kViolatesM}) {
      if (state.bucket(b).count(side)) {
        d = serve(b, side);
        found = true;
        break;
      }
    }
  }
  for (B b : order) {
    if (found) break;
    const auto& set = state.bucket(b);
    if (set.empty()) continue;
    ComponentLabel c = *set.begin();
    if (b == B::kViolatesS || b == B::kViolatesM) {
      ComponentLabel fresh = -1;
      for (ComponentLabel side : {last.side_u, last.side_v}) {
        if (side >= 0 && set.count(side) && (fresh < 0 || side < fresh)) fresh = side;
      }
      if (fresh >= 0) c = fresh;
    }
    d = serve(b, c);
    found = true;
  }
  if (!found) throw GameError(ErrorCode::kStrategyStuck, "uncoloured edges but no active component");
  const EdgeId forced = forced_edge(state);
  if (forced >= 0 && forced != d.edge) {
    StrategyDecision f;
    f.case_tag = CaseTag::kForced;
    f.edge = forced;
    f.colour = lowest(state.feasible_mask(forced));
    f.component = state.component_of_edge(forced);
    f.target_edge = d.edge;  // the move it displaced
    return f;
  }
  return d;
}

}  // namespace edgegame
