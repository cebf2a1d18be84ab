#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edgegame/decremental_forest.hpp"
#include "edgegame/forest.hpp"
#include "edgegame/lca_index.hpp"

namespace edgegame {

using ColourMask = uint64_t;  // bit c set <=> colour c present (c in 1..63)

inline int popcount(ColourMask m) { return __builtin_popcountll(m); }

// A coloured edge as seen from one component: the edge, its colour and the
// endpoint that lies inside the component.
struct LeafCopy {
  EdgeId edge;
  Vertex attach;
  Colour colour;
};

// Summary of one component's induced sub-tree: its coloured leaf edges plus
// the uncoloured paths joining them.
struct ComponentView {
  ComponentLabel label = -1;
  int32_t x = 0;
  std::vector<Vertex> base_nodes;  // ascending vertex id
  bool star_like = false;          // exactly one base node
  Vertex base = -1;                // the unique base node, -1 otherwise
  int32_t gamma = 0;               // coloured edges incident on base
  std::vector<LeafCopy> matched;   // only filled when star_like
  std::vector<LeafCopy> unmatched;
  bool relevant = false;
  ColourMask colours = 0;
  int32_t colours_present = 0;
  bool s_ok = true;
  bool m_ok = true;

  // Set when there are two or more base nodes: `repair_base` is the base node
  // whose side of the path between the two holds more coloured leaves,
  // `repair_target` the other one, and `repair_unmatched` the leaves on the
  // repair_base side that share no colour with edges at repair_base.
  Vertex repair_base = -1;
  Vertex repair_target = -1;
  std::vector<LeafCopy> repair_unmatched;

  int32_t unmatched_count() const { return static_cast<int32_t>(unmatched.size()); }
  int32_t m_limit() const { return gamma >= 3 ? 0 : 3 - gamma; }
};

// Vertices of degree >= 3 in the induced sub-tree of the given leaves, in
// ascending id order. Empty when fewer than three leaves.
std::vector<Vertex> base_nodes(std::span<const LeafCopy> leaves, const LcaIndex& lca);

struct Classification {
  int32_t gamma = 0;
  std::vector<LeafCopy> matched;
  std::vector<LeafCopy> unmatched;
  ColourMask colours = 0;
  bool relevant = false;
};

// Matched / unmatched split around a unique base node. Throws
// kNoUniqueBaseNode when base < 0.
Classification classify(std::span<const LeafCopy> leaves, Vertex base, const Forest& forest);

// Unmatched count within max(3 - gamma, 0). True for anything that is not a
// relevant star.
bool check_m(const ComponentView& view);

ComponentView analyze(ComponentLabel label, std::span<const LeafCopy> leaves, const Forest& forest,
                      const LcaIndex& lca);

// Per-component line of an invariant report.
struct ComponentSummary {
  ComponentLabel label = -1;
  int32_t x = 0;
  bool star_like = false;
  bool s_ok = true;
  bool m_ok = true;
  int32_t gamma = 0;
  int32_t unmatched = 0;
  int32_t colours = 0;
  bool relevant = false;
  std::vector<Vertex> base_nodes;

  bool operator==(const ComponentSummary&) const = default;
};

ComponentSummary summarize(const ComponentView& view);

struct InvariantReport {
  std::vector<ComponentSummary> components;  // components created by the move
  int32_t active_components = 0;
  int32_t s_violations = 0;
  int32_t m_violations = 0;
  int32_t unmatched_cap_violations = 0;  // components with more than two unmatched edges
  int32_t star_size_violations = 0;   // S holds but x > delta
  int32_t colour_bound_violations = 0;   // S and M hold but more than delta-1 colours
  int32_t three_leaf_violations = 0;   // x == 3 without S and M
  int32_t max_colours_present = 0;
  int32_t max_x = 0;

  bool alice_invariants_hold() const {
    return s_violations == 0 && m_violations == 0 && unmatched_cap_violations == 0;
  }
  bool operator==(const InvariantReport&) const = default;
};

}  // namespace edgegame
