#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "edgegame/forest.hpp"

namespace edgegame {

using ComponentLabel = int32_t;

enum class DecrementalVariant { kBaseline, kTwoLevel };

std::string_view to_string(DecrementalVariant variant);
DecrementalVariant parse_variant(std::string_view text);

struct SplitReport {
  int32_t smaller_side_size = 0;  // vertices (baseline) or pieces (two-level, global step)
  ComponentLabel new_label = -1;  // fresh label given to the smaller side
  ComponentLabel kept_label = -1;
};

// Component names over a forest under online edge deletion.
//
// kBaseline relabels the side with fewer vertices, found by traversing both
// sides in lockstep. kTwoLevel clusters each tree into connected bottom
// clusters of at least ceil(log2(n)/2) vertices; vertices keep a per-cluster
// piece id maintained by the baseline rule inside their cluster, and pieces
// carry the global label, maintained by the baseline rule over the piece
// forest.
class DecrementalForest {
 public:
  DecrementalForest(const Forest& forest, DecrementalVariant variant);

  SplitReport delete_edge(EdgeId e);
  SplitReport delete_edge(Vertex u, Vertex v);

  ComponentLabel find(Vertex v) const {
    return variant_ == DecrementalVariant::kBaseline ? label_[v] : piece_label_[piece_[v]];
  }
  bool connected(Vertex u, Vertex v) const { return find(u) == find(v); }
  bool deleted(EdgeId e) const { return deleted_[e]; }
  // Number of undeleted edges incident on v.
  int32_t live_degree(Vertex v) const { return live_count_[v]; }
  std::span<const EdgeId> live_incident(Vertex v) const {
    return {live_adj_.data() + adj_start_[v], static_cast<size_t>(live_count_[v])};
  }

  DecrementalVariant variant() const { return variant_; }
  uint64_t relabel_count() const { return relabels_; }
  uint64_t traversal_steps() const { return steps_; }
  // Upper bound on labels handed out so far (labels are < this value).
  ComponentLabel label_bound() const { return next_label_; }

  // Two-level statistics.
  int32_t cluster_size_threshold() const { return threshold_; }
  int32_t macro_node_count() const { return cluster_count_; }
  int32_t cluster_of(Vertex v) const { return cluster_of_[v]; }

 private:
  struct Side {
    std::vector<std::pair<int32_t, int32_t>> stack;  // (node, node we came from)
    std::vector<int32_t> visited;
    int32_t min_node = INT32_MAX;
    bool done() const { return stack.empty(); }
  };

  void unlink(EdgeId e);
  template <class Expand>
  bool smaller_side(int32_t a, int32_t b, Side& sa, Side& sb, Expand&& expand);
  SplitReport delete_baseline(EdgeId e);
  SplitReport delete_two_level(EdgeId e);
  SplitReport split_pieces(int32_t pa, int32_t pb);
  void boundary_add(int32_t piece, EdgeId e, int side);
  void boundary_remove(int32_t piece, EdgeId e, int side);

  const Forest* forest_;
  DecrementalVariant variant_;
  std::vector<uint8_t> deleted_;
  std::vector<int32_t> adj_start_;
  std::vector<int32_t> live_count_;
  std::vector<EdgeId> live_adj_;
  std::vector<int32_t> adj_pos_;  // 2e + side -> slot in live_adj_
  ComponentLabel next_label_ = 0;
  uint64_t relabels_ = 0;
  uint64_t steps_ = 0;
  Side side_a_;
  Side side_b_;

  // kBaseline
  std::vector<ComponentLabel> label_;

  // kTwoLevel
  int32_t threshold_ = 0;
  int32_t cluster_count_ = 0;
  std::vector<int32_t> cluster_of_;
  std::vector<int32_t> piece_;
  std::vector<ComponentLabel> piece_label_;
  std::vector<int32_t> piece_size_;
  std::vector<std::vector<EdgeId>> boundary_;
  std::vector<int32_t> boundary_pos_;  // 2e + side -> slot in boundary_[piece]
};

}  // namespace edgegame
