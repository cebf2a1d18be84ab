#pragma once

#include <cstdint>
#include <vector>

#include "edgegame/forest.hpp"

namespace edgegame {

// Constant-time LCA and level-ancestor queries on a rooted forest.
//
// Every original tree is rooted at its smallest vertex. LCA uses an Euler tour
// with a block-decomposed RMQ (64-wide blocks answered with monotone-stack
// bitmasks, a sparse table over block minima). Level ancestors use the ladder
// algorithm with jump pointers stored at leaves only.
//
// The index is immutable after construction. Query counts are tallied in a
// thread-local counter so concurrent games can each measure their own work.
class LcaIndex {
 public:
  LcaIndex() = default;
  explicit LcaIndex(const Forest& forest);

  Vertex lca(Vertex u, Vertex v) const;
  // Ancestor of v at the given depth; requires depth <= depth(v).
  Vertex level_ancestor(Vertex v, int32_t depth) const;
  // Neighbour of v on the unique v -> w path. Throws kDifferentComponents.
  Vertex next_on_path(Vertex v, Vertex w) const;
  int32_t distance(Vertex u, Vertex v) const;

  bool same_tree(Vertex u, Vertex v) const { return root_[u] == root_[v]; }
  Vertex root_of(Vertex v) const { return root_[v]; }
  Vertex parent(Vertex v) const { return parent_[v]; }  // -1 at roots
  int32_t depth(Vertex v) const { return depth_[v]; }
  int32_t preorder(Vertex v) const { return tin_[v]; }
  bool is_ancestor(Vertex a, Vertex b) const {
    return tin_[a] <= tin_[b] && tout_[b] <= tout_[a];
  }
  int32_t vertex_count() const { return static_cast<int32_t>(depth_.size()); }

  static uint64_t query_count();
  static void reset_query_count();

 private:
  int32_t rmq_in_block(int32_t l, int32_t r) const;
  int32_t rmq(int32_t l, int32_t r) const;
  int32_t better(int32_t i, int32_t j) const {
    return euler_depth_[i] <= euler_depth_[j] ? i : j;
  }
  Vertex ladder_up(Vertex v, int32_t dist) const;

  std::vector<Vertex> parent_;
  std::vector<Vertex> root_;
  std::vector<int32_t> depth_;
  std::vector<int32_t> tin_;
  std::vector<int32_t> tout_;

  // Euler tour RMQ.
  std::vector<Vertex> euler_;
  std::vector<int32_t> euler_depth_;
  std::vector<int32_t> first_;
  std::vector<uint64_t> in_block_mask_;
  std::vector<std::vector<int32_t>> sparse_;  // positions of block minima

  // Ladders: path_of_[v] indexes ladders_, ladder_pos_[v] is v's slot.
  std::vector<int32_t> path_of_;
  std::vector<int32_t> ladder_pos_;
  std::vector<int32_t> ladder_start_;
  std::vector<Vertex> ladder_;
  std::vector<Vertex> leaf_below_;
  std::vector<int32_t> jump_start_;  // per vertex, -1 if not a leaf
  std::vector<Vertex> jumps_;
};

}  // namespace edgegame
