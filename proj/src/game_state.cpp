#include "edgegame/game_state.hpp"

#include <algorithm>

namespace edgegame {

std::string_view to_string(Player p) { return p == Player::kAlice ? "Alice" : "Bob"; }

GameState::GameState(std::shared_ptr<const Forest> forest, GameConfig config)
    : GameState(forest, std::make_shared<const LcaIndex>(*forest), config) {}

GameState::GameState(std::shared_ptr<const Forest> forest, std::shared_ptr<const LcaIndex> lca,
                     GameConfig config)
    : forest_(std::move(forest)),
      lca_(std::move(lca)),
      config_(config),
      components_(*forest_, config.variant),
      to_move_(config.first_player) {
  if (config_.k == 0) config_.k = forest_->delta() + 1;
  if (config_.k < 1 || config_.k > 62) {
    throw GameError(ErrorCode::kParse, "colour count must lie in 1..62");
  }
  const int32_t m = forest_->edge_count();
  colour_.assign(m, kNoColour);
  at_vertex_.assign(forest_->vertex_count(), 0);
  uncoloured_ = m;
  colours_hist_.assign(config_.k + 2, 0);
  x_hist_.assign(forest_->delta() + 3, 0);
  first_edge_.assign(forest_->tree_count(), -1);
  for (EdgeId e = m - 1; e >= 0; --e) first_edge_[forest_->tree_of(forest_->edge(e).u)] = e;
  records_.resize(components_.label_bound());
  for (int32_t t = 0; t < forest_->tree_count(); ++t) {
    if (first_edge_[t] < 0) continue;
    records_[t].view.label = t;
    activate(t);
  }
  if (config_.k == 1) {
    for (EdgeId e = 0; e < m; ++e) critical_.insert(e);
  }
}

ColourMask GameState::feasible_mask(EdgeId e) const {
  const Edge& ed = forest_->edge(e);
  return full_mask() & ~(at_vertex_[ed.u] | at_vertex_[ed.v]);
}

std::vector<ComponentLabel> GameState::active_components() const {
  std::vector<ComponentLabel> out;
  for (const auto& b : buckets_) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

Bucket GameState::bucket_of(const ComponentView& v) const {
  if (!v.s_ok) return Bucket::kViolatesS;
  if (v.star_like) {
    if (!v.m_ok || v.unmatched_count() > 2) return Bucket::kViolatesM;
    if (v.unmatched.empty()) return Bucket::kStar;
    if (v.relevant && v.gamma == forest_->delta() - 2 && v.unmatched.size() == 1) {
      const Vertex t = v.unmatched.front().attach;
      if (lca_->parent(t) == v.base || lca_->parent(v.base) == t) return Bucket::kStarFragile;
    }
    return Bucket::kStarUnmatched;
  }
  if (v.x >= 2) return Bucket::kTwoLeaves;
  return v.x == 1 ? Bucket::kOneLeaf : Bucket::kNoLeaves;
}

void GameState::account(const Record& r, int sign) {
  const ComponentView& v = r.view;
  const int32_t delta = forest_->delta();
  active_count_ += sign;
  s_viol_ += sign * !v.s_ok;
  m_viol_ += sign * !v.m_ok;
  unmatched_cap_viol_ += sign * (v.unmatched_count() > 2);
  star_size_viol_ += sign * (v.s_ok && v.x > delta);
  colour_bound_viol_ += sign * (v.s_ok && v.m_ok && v.colours_present > delta - 1);
  three_leaf_viol_ += sign * (v.x == 3 && !(v.s_ok && v.m_ok));
  colours_hist_[std::min<int32_t>(v.colours_present, config_.k + 1)] += sign;
  if (v.x >= static_cast<int32_t>(x_hist_.size())) x_hist_.resize(v.x + 1, 0);
  x_hist_[v.x] += sign;
}

void GameState::ensure_record(ComponentLabel c) {
  if (c >= static_cast<ComponentLabel>(records_.size())) records_.resize(c + 1);
}

void GameState::activate(ComponentLabel c) {
  Record& r = records_[c];
  r.view = analyze(c, r.leaves, *forest_, *lca_);
  r.bucket = bucket_of(r.view);
  r.active = true;
  buckets_[static_cast<int>(r.bucket)].insert(c);
  account(r, +1);
  max_list_len_ = std::max(max_list_len_, static_cast<int32_t>(r.leaves.size()));
}

void GameState::deactivate(ComponentLabel c) {
  Record& r = records_[c];
  if (!r.active) return;
  buckets_[static_cast<int>(r.bucket)].erase(c);
  account(r, -1);
  r.active = false;
}

// Feasible sets only shrink, so edges only ever move towards dead.
void GameState::refresh_feasibility(Vertex v) {
  for (EdgeId f : components_.live_incident(v)) {
    const int left = popcount(feasible_mask(f));
    if (left == 0) {
      critical_.erase(f);
      dead_.insert(f);
    } else if (left == 1) {
      critical_.insert(f);
    }
  }
}

SplitOutcome GameState::apply_colouring(EdgeId e, Colour c) {
  if (!forest_->is_valid_edge(e)) {
    throw GameError(ErrorCode::kUnknownEdge, "unknown edge " + std::to_string(e));
  }
  if (colour_[e] != kNoColour) {
    throw GameError(ErrorCode::kEdgeAlreadyColoured, "edge " + std::to_string(e) + " is already coloured");
  }
  const Edge ed = forest_->edge(e);
  if (c < 1 || c > config_.k) {
    throw GameError(ErrorCode::kImproperColour, "colour " + std::to_string(c) + " outside 1.." +
                                                    std::to_string(config_.k));
  }
  for (Vertex x : {ed.u, ed.v}) {
    if (at_vertex_[x] >> c & 1) {
      throw GameError(ErrorCode::kImproperColour, "improper: colour " + std::to_string(c) +
                                                      " used at vertex " + std::to_string(x));
    }
  }

  const ComponentLabel old_label = components_.find(ed.u);
  std::vector<LeafCopy> old_leaves = std::move(records_[old_label].leaves);
  records_[old_label].leaves.clear();
  deactivate(old_label);

  components_.delete_edge(e);
  colour_[e] = c;
  at_vertex_[ed.u] |= ColourMask{1} << c;
  at_vertex_[ed.v] |= ColourMask{1} << c;
  --uncoloured_;
  ++moves_;

  SplitOutcome out;
  out.side_u = components_.live_degree(ed.u) > 0 ? components_.find(ed.u) : -1;
  out.side_v = components_.live_degree(ed.v) > 0 ? components_.find(ed.v) : -1;
  for (ComponentLabel side : {out.side_u, out.side_v}) {
    if (side < 0) continue;
    ensure_record(side);
    records_[side].leaves.clear();
  }
  for (const LeafCopy& leaf : old_leaves) {
    ++leaf_ops_;
    if (components_.live_degree(leaf.attach) == 0) continue;
    records_[components_.find(leaf.attach)].leaves.push_back(leaf);
    ++leaf_ops_;
    ++out.moved_leaves;
  }
  if (out.side_u >= 0) {
    records_[out.side_u].leaves.push_back({e, ed.u, c});
    ++leaf_ops_;
  }
  if (out.side_v >= 0) {
    records_[out.side_v].leaves.push_back({e, ed.v, c});
    ++leaf_ops_;
  }
  for (ComponentLabel side : {out.side_u, out.side_v}) {
    if (side >= 0) activate(side);
  }
  critical_.erase(e);
  refresh_feasibility(ed.u);
  refresh_feasibility(ed.v);
  last_split_ = out;
  last_edge_ = e;
  return out;
}

SplitOutcome GameState::play_colour(EdgeId e, Colour c) {
  SplitOutcome out = apply_colouring(e, c);
  to_move_ = opponent(to_move_);
  return out;
}

void GameState::play_skip() {
  ++moves_;
  to_move_ = opponent(to_move_);
}

InvariantReport GameState::report(std::span<const ComponentLabel> touched) const {
  InvariantReport r;
  for (ComponentLabel c : touched) {
    if (is_active(c)) r.components.push_back(summarize(records_[c].view));
  }
  r.active_components = active_count_;
  r.s_violations = s_viol_;
  r.m_violations = m_viol_;
  r.unmatched_cap_violations = unmatched_cap_viol_;
  r.star_size_violations = star_size_viol_;
  r.colour_bound_violations = colour_bound_viol_;
  r.three_leaf_violations = three_leaf_viol_;
  for (int32_t i = static_cast<int32_t>(colours_hist_.size()) - 1; i >= 0; --i) {
    if (colours_hist_[i] > 0) {
      r.max_colours_present = i;
      break;
    }
  }
  for (int32_t i = static_cast<int32_t>(x_hist_.size()) - 1; i >= 0; --i) {
    if (x_hist_[i] > 0) {
      r.max_x = i;
      break;
    }
  }
  return r;
}

}  // namespace edgegame
