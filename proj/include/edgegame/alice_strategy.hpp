#pragma once

#include <cstdint>
#include <string_view>

#include "edgegame/game_state.hpp"

namespace edgegame {

enum class CaseTag {
  kX0,
  kX1,
  kX2Path,
  kX2Adj,
  kStarAllIncident,
  kStarTowardAb,
  kRepairS,
  kRepairM,
  // An edge down to its last feasible colour is coloured before anything
  // else. Only reachable once (S) or (M) has already failed.
  kForced,
};

std::string_view to_string(CaseTag tag);

// Order in which non-repair components are served.
enum class AlicePriority {
  kStarsFirst,        // stars with a base node before components with <= 2 leaves
  kSmallCasesFirst,   // the reverse, for falsification experiments
};

std::string_view to_string(AlicePriority p);
AlicePriority parse_priority(std::string_view text);

struct AliceOptions {
  AlicePriority priority = AlicePriority::kStarsFirst;
  // Play on forests whose maximum degree is outside {4, 5}, without guarantee.
  bool allow_any_delta = false;
};

struct StrategyDecision {
  CaseTag case_tag = CaseTag::kX0;
  EdgeId edge = -1;
  Colour colour = kNoColour;
  ComponentLabel component = -1;
  // Audit trail.
  Vertex base = -1;          // base node acted at, if any
  EdgeId target_edge = -1;   // the edge ab steered towards
  Vertex target_vertex = -1; // second base node w for (S) repairs
  int32_t path_length = -1;  // edges from base to the target attachment

  bool operator==(const StrategyDecision&) const = default;
};

// Colours in 1..k absent at both endpoints of an uncoloured edge.
ColourMask feasible_colours(const GameState& state, EdgeId e);

// Alice's move. Throws kNoUncolouredEdge when nothing is left to colour,
// kUnsupportedDelta for forests outside {4, 5} unless allowed, and
// kStrategyStuck when the chosen edge has no feasible colour.
StrategyDecision choose_move(const GameState& state, const AliceOptions& options = {});

}  // namespace edgegame
