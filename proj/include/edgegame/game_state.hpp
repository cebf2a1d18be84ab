#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "edgegame/component.hpp"
#include "edgegame/decremental_forest.hpp"
#include "edgegame/forest.hpp"
#include "edgegame/lca_index.hpp"

namespace edgegame {

enum class Player { kAlice, kBob };

inline Player opponent(Player p) { return p == Player::kAlice ? Player::kBob : Player::kAlice; }
std::string_view to_string(Player p);

struct GameConfig {
  int32_t k = 0;  // 0 means delta + 1
  Player first_player = Player::kAlice;
  bool bob_may_skip = true;
  DecrementalVariant variant = DecrementalVariant::kBaseline;
};

// Which bucket a component sits in; the strategy scans buckets in order.
enum class Bucket : uint8_t {
  kViolatesS,
  kViolatesM,       // (M) broken, or a star with more than two unmatched edges
  kStarFragile,     // relevant star, delta-2 edges coloured at the base and its
                    // one unmatched leaf next to the base: one Bob move from an
                    // unrepairable (M) violation
  kStarUnmatched,   // star-like, invariants fine, some unmatched edge
  kStar,            // star-like, invariants fine, nothing unmatched
  kTwoLeaves,
  kOneLeaf,
  kNoLeaves,
  kCount,
};

struct SplitOutcome {
  // Components containing each endpoint afterwards, -1 if that side has no
  // uncoloured edge left.
  ComponentLabel side_u = -1;
  ComponentLabel side_v = -1;
  int32_t moved_leaves = 0;
};


// Partial proper edge colouring of a forest together with the component
// partition of the uncoloured edges. Colouring an edge splits its component
// in two and adds a copy of the edge, as a coloured leaf, to each side.
class GameState {
 public:
  GameState(std::shared_ptr<const Forest> forest, std::shared_ptr<const LcaIndex> lca,
            GameConfig config);
  // Builds the LCA index itself.
  GameState(std::shared_ptr<const Forest> forest, GameConfig config);

  const Forest& forest() const { return *forest_; }
  const LcaIndex& lca() const { return *lca_; }
  std::shared_ptr<const Forest> forest_ptr() const { return forest_; }
  std::shared_ptr<const LcaIndex> lca_ptr() const { return lca_; }
  const GameConfig& config() const { return config_; }
  int32_t k() const { return config_.k; }
  int32_t delta() const { return forest_->delta(); }

  Colour colour_of(EdgeId e) const { return colour_[e]; }
  std::span<const Colour> colouring() const { return colour_; }
  bool is_coloured(EdgeId e) const { return colour_[e] != kNoColour; }
  int32_t uncoloured_count() const { return uncoloured_; }
  ColourMask colours_at(Vertex v) const { return at_vertex_[v]; }
  ColourMask full_mask() const { return ((ColourMask{1} << config_.k) - 1) << 1; }
  // Colours usable on an uncoloured edge: absent at both endpoints.
  ColourMask feasible_mask(EdgeId e) const;
  // Uncoloured edges with no feasible colour.
  int32_t dead_edge_count() const { return static_cast<int32_t>(dead_.size()); }
  const std::set<EdgeId>& dead_edges() const { return dead_; }
  // Uncoloured edges with exactly one feasible colour left.
  const std::set<EdgeId>& critical_edges() const { return critical_; }

  Player to_move() const { return to_move_; }
  int32_t move_count() const { return moves_; }
  int32_t live_degree(Vertex v) const { return components_.live_degree(v); }
  std::span<const EdgeId> uncoloured_incident(Vertex v) const { return components_.live_incident(v); }

  // Component of an uncoloured edge (or of a vertex with an uncoloured edge).
  ComponentLabel component_of_vertex(Vertex v) const { return components_.find(v); }
  ComponentLabel component_of_edge(EdgeId e) const { return components_.find(forest_->edge(e).u); }
  bool is_active(ComponentLabel c) const {
    return c >= 0 && c < static_cast<ComponentLabel>(records_.size()) && records_[c].active;
  }
  std::span<const LeafCopy> coloured_leaves(ComponentLabel c) const { return records_[c].leaves; }
  const ComponentView& view(ComponentLabel c) const { return records_[c].view; }
  const std::set<ComponentLabel>& bucket(Bucket b) const { return buckets_[static_cast<int>(b)]; }
  std::vector<ComponentLabel> active_components() const;
  int32_t active_component_count() const { return active_count_; }
  // Smallest edge id of an original tree (for untouched components).
  EdgeId first_edge_of_tree(int32_t tree) const { return first_edge_[tree]; }
  const DecrementalForest& decremental() const { return components_; }

  // Colours an edge with the edge-split semantics. Does not change the turn.
  // Throws kUnknownEdge, kEdgeAlreadyColoured or kImproperColour, leaving the
  // state untouched.
  SplitOutcome apply_colouring(EdgeId e, Colour c);
  // apply_colouring followed by a turn change.
  SplitOutcome play_colour(EdgeId e, Colour c);
  void play_skip();

  // Global invariant summary with the listed components spelled out.
  InvariantReport report(std::span<const ComponentLabel> touched) const;

  // Sides produced by the most recent colouring.
  const SplitOutcome& last_split() const { return last_split_; }
  EdgeId last_coloured_edge() const { return last_edge_; }

  // Count of coloured-leaf list entries read or written so far.
  uint64_t leaf_list_ops() const { return leaf_ops_; }
  // Largest coloured-leaf list length ever observed.
  int32_t max_leaf_list_length() const { return max_list_len_; }

 private:
  struct Record {
    std::vector<LeafCopy> leaves;
    ComponentView view;
    Bucket bucket = Bucket::kNoLeaves;
    bool active = false;
  };

  void ensure_record(ComponentLabel c);
  void activate(ComponentLabel c);
  void deactivate(ComponentLabel c);
  void account(const Record& r, int sign);
  Bucket bucket_of(const ComponentView& v) const;
  void refresh_feasibility(Vertex v);

  std::shared_ptr<const Forest> forest_;
  std::shared_ptr<const LcaIndex> lca_;
  GameConfig config_;
  DecrementalForest components_;
  std::vector<Colour> colour_;
  std::vector<ColourMask> at_vertex_;
  std::vector<EdgeId> first_edge_;
  std::vector<Record> records_;
  std::set<ComponentLabel> buckets_[static_cast<int>(Bucket::kCount)];
  std::set<EdgeId> dead_;
  std::set<EdgeId> critical_;
  Player to_move_;
  int32_t uncoloured_ = 0;
  int32_t moves_ = 0;
  int32_t active_count_ = 0;
  uint64_t leaf_ops_ = 0;
  int32_t max_list_len_ = 0;
  SplitOutcome last_split_;
  EdgeId last_edge_ = -1;

  // Aggregates over active components.
  int32_t s_viol_ = 0;
  int32_t m_viol_ = 0;
  int32_t unmatched_cap_viol_ = 0;
  int32_t star_size_viol_ = 0;
  int32_t colour_bound_viol_ = 0;
  int32_t three_leaf_viol_ = 0;
  std::vector<int32_t> colours_hist_;
  std::vector<int32_t> x_hist_;
};

}  // namespace edgegame
