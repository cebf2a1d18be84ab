#include "edgegame/lca_index.hpp"

#include <bit>
#include <cassert>

namespace edgegame {

namespace {
thread_local uint64_t tl_queries = 0;
constexpr int32_t kBlock = 64;

int32_t floor_log2(uint32_t x) { return 31 - std::countl_zero(x); }
}  // namespace

uint64_t LcaIndex::query_count() { return tl_queries; }
void LcaIndex::reset_query_count() { tl_queries = 0; }

LcaIndex::LcaIndex(const Forest& forest) {
  const int32_t n = forest.vertex_count();
  parent_.assign(n, -1);
  root_.assign(n, -1);
  depth_.assign(n, 0);
  tin_.assign(n, 0);
  tout_.assign(n, 0);
  first_.assign(n, 0);
  euler_.reserve(2 * static_cast<size_t>(n));

  std::vector<Vertex> order;  // preorder
  order.reserve(n);
  std::vector<std::pair<Vertex, int32_t>> stack;
  int32_t timer = 0;
  for (Vertex r = 0; r < n; ++r) {
    if (root_[r] >= 0) continue;
    root_[r] = r;
    stack.push_back({r, 0});
    tin_[r] = timer++;
    order.push_back(r);
    first_[r] = static_cast<int32_t>(euler_.size());
    euler_.push_back(r);
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      auto inc = forest.incident(v);
      if (idx < static_cast<int32_t>(inc.size())) {
        Vertex w = forest.edge(inc[idx++]).other(v);
        if (w == parent_[v]) continue;
        parent_[w] = v;
        root_[w] = r;
        depth_[w] = depth_[v] + 1;
        tin_[w] = timer++;
        order.push_back(w);
        first_[w] = static_cast<int32_t>(euler_.size());
        euler_.push_back(w);
        stack.push_back({w, 0});
      } else {
        tout_[v] = timer - 1;
        Vertex done = v;
        stack.pop_back();
        if (!stack.empty()) euler_.push_back(stack.back().first);
        (void)done;
      }
    }
  }

  // Block RMQ over the Euler depths.
  const int32_t len = static_cast<int32_t>(euler_.size());
  euler_depth_.resize(len);
  for (int32_t i = 0; i < len; ++i) euler_depth_[i] = depth_[euler_[i]];
  in_block_mask_.assign(len, 0);
  const int32_t blocks = (len + kBlock - 1) / kBlock;
  std::vector<int32_t> block_min(blocks);
  for (int32_t b = 0; b < blocks; ++b) {
    const int32_t start = b * kBlock;
    const int32_t stop = std::min(len, start + kBlock);
    uint64_t stack_mask = 0;
    for (int32_t i = start; i < stop; ++i) {
      while (stack_mask != 0) {
        int32_t top = start + 63 - std::countl_zero(stack_mask);
        if (euler_depth_[top] < euler_depth_[i]) break;
        stack_mask ^= uint64_t{1} << (top - start);
      }
      stack_mask |= uint64_t{1} << (i - start);
      in_block_mask_[i] = stack_mask;
    }
    block_min[b] = start + std::countr_zero(in_block_mask_[stop - 1]);
  }
  sparse_.push_back(std::move(block_min));
  for (int32_t j = 1; (1 << j) <= blocks; ++j) {
    const auto& prev = sparse_[j - 1];
    std::vector<int32_t> cur(blocks - (1 << j) + 1);
    for (size_t b = 0; b < cur.size(); ++b) cur[b] = better(prev[b], prev[b + (1 << (j - 1))]);
    sparse_.push_back(std::move(cur));
  }

  // Long-path decomposition and ladders.
  std::vector<int32_t> height(n, 0);
  std::vector<Vertex> long_child(n, -1);
  leaf_below_.assign(n, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    if (long_child[v] < 0) leaf_below_[v] = v;
    else leaf_below_[v] = leaf_below_[long_child[v]];
    Vertex p = parent_[v];
    if (p >= 0 && (long_child[p] < 0 || height[v] + 1 > height[p])) {
      height[p] = height[v] + 1;
      long_child[p] = v;
    }
  }
  path_of_.assign(n, -1);
  ladder_pos_.assign(n, 0);
  ladder_.reserve(2 * static_cast<size_t>(n));
  for (Vertex top : order) {
    if (parent_[top] >= 0 && long_child[parent_[top]] == top) continue;
    const int32_t path_len = height[top] + 1;
    const int32_t ext = std::min(path_len, depth_[top]);
    const int32_t id = static_cast<int32_t>(ladder_start_.size());
    const int32_t start = static_cast<int32_t>(ladder_.size());
    ladder_start_.push_back(start);
    ladder_.resize(start + ext + path_len);
    Vertex a = top;
    for (int32_t i = ext - 1; i >= 0; --i) {
      a = parent_[a];
      ladder_[start + i] = a;
    }
    Vertex v = top;
    for (int32_t i = 0; i < path_len; ++i) {
      ladder_[start + ext + i] = v;
      path_of_[v] = id;
      ladder_pos_[v] = ext + i;
      v = long_child[v];
    }
  }

  // Jump pointers from leaves only.
  jump_start_.assign(n, -1);
  for (Vertex v : order) {
    if (long_child[v] >= 0 || depth_[v] == 0) continue;
    jump_start_[v] = static_cast<int32_t>(jumps_.size());
    const int32_t levels = floor_log2(static_cast<uint32_t>(depth_[v])) + 1;
    jumps_.push_back(parent_[v]);
    for (int32_t i = 1; i < levels; ++i) {
      jumps_.push_back(ladder_up(jumps_.back(), 1 << (i - 1)));
    }
  }
}

Vertex LcaIndex::ladder_up(Vertex v, int32_t dist) const {
  assert(dist <= ladder_pos_[v]);
  return ladder_[ladder_start_[path_of_[v]] + ladder_pos_[v] - dist];
}

int32_t LcaIndex::rmq_in_block(int32_t l, int32_t r) const {
  const int32_t start = l - l % kBlock;
  uint64_t m = in_block_mask_[r] & (~uint64_t{0} << (l - start));
  return start + std::countr_zero(m);
}

int32_t LcaIndex::rmq(int32_t l, int32_t r) const {
  const int32_t bl = l / kBlock;
  const int32_t br = r / kBlock;
  if (bl == br) return rmq_in_block(l, r);
  int32_t best = better(rmq_in_block(l, bl * kBlock + kBlock - 1), rmq_in_block(br * kBlock, r));
  if (bl + 1 <= br - 1) {
    const int32_t j = floor_log2(static_cast<uint32_t>(br - 1 - bl));
    best = better(best, better(sparse_[j][bl + 1], sparse_[j][br - (1 << j)]));
  }
  return best;
}

Vertex LcaIndex::lca(Vertex u, Vertex v) const {
  ++tl_queries;
  if (root_[u] != root_[v]) {
    throw GameError(ErrorCode::kDifferentComponents, "lca of vertices in different trees");
  }
  int32_t a = first_[u];
  int32_t b = first_[v];
  if (a > b) std::swap(a, b);
  return euler_[rmq(a, b)];
}

Vertex LcaIndex::level_ancestor(Vertex v, int32_t target_depth) const {
  ++tl_queries;
  assert(target_depth >= 0 && target_depth <= depth_[v]);
  if (target_depth == depth_[v]) return v;
  const Vertex leaf = leaf_below_[v];
  const int32_t span = depth_[leaf] - target_depth;
  const int32_t i = floor_log2(static_cast<uint32_t>(span));
  const Vertex u = jumps_[jump_start_[leaf] + i];
  return ladder_up(u, depth_[u] - target_depth);
}

Vertex LcaIndex::next_on_path(Vertex v, Vertex w) const {
  if (root_[v] != root_[w]) {
    throw GameError(ErrorCode::kDifferentComponents,
                    "no path between " + std::to_string(v) + " and " + std::to_string(w));
  }
  if (v == w) throw GameError(ErrorCode::kDifferentComponents, "next_on_path needs distinct vertices");
  if (lca(v, w) != v) return parent_[v];
  return level_ancestor(w, depth_[v] + 1);
}

int32_t LcaIndex::distance(Vertex u, Vertex v) const {
  return depth_[u] + depth_[v] - 2 * depth_[lca(u, v)];
}

}  // namespace edgegame
