#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edgegame/component.hpp"
#include "edgegame/game_state.hpp"

namespace edgegame {

// A star seen from its base: what each uncoloured base edge leads to, the
// colours already at the base, and the leaves hanging off each branch. Small
// enough to search two plies of Bob-then-Alice play exhaustively.
struct StarModel {
  struct Leaf {
    Colour colour;
    bool adjacent;  // attached at the branch's first vertex
  };
  struct Branch {
    ColourMask at_far = 0;  // colours already at the first vertex past the base
    bool extendable = false;  // that vertex has another uncoloured edge
    std::vector<Leaf> leaves;
  };
  int32_t delta = 0;
  int32_t k = 0;
  bool relevant = false;
  int32_t gamma = 0;
  ColourMask at_base = 0;
  std::vector<Branch> branches;

  int32_t unmatched() const;
  int32_t colours() const;
  // (M) and at most delta-1 colours.
  bool ok() const;
  // Some Bob move leaves a position where no Alice move restores ok().
  bool fragile() const;
};

// Model of the star with base `base` made of `leaves` (plus `extra` when its
// edge is >= 0), after the uncoloured edge `played` gets colour `colour`
// (pass -1 to model the current position).
StarModel make_star_model(const GameState& state, Vertex base, std::span<const LeafCopy> leaves,
                          const LeafCopy& extra, EdgeId played, Colour colour);

}  // namespace edgegame
