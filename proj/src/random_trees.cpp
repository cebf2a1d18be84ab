#include "edgegame/random_trees.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

namespace edgegame {

namespace {

Forest relabel(int32_t n, std::vector<Edge> edges, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (Edge& e : edges) {
    e = {perm[e.u], perm[e.v]};
    if (rng() & 1) std::swap(e.u, e.v);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Forest(n, std::move(edges));
}

}  // namespace

Forest random_tree(int32_t n, int32_t max_degree, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  if (n <= 1) return Forest(std::max(n, 0), edges);
  if (max_degree < 2 && n > 2) throw GameError(ErrorCode::kBadVertexIndex, "degree cap too small");
  std::vector<int32_t> degree(n, 0);
  std::vector<Vertex> open{0};  // vertices with spare degree
  for (Vertex v = 1; v < n; ++v) {
    const size_t i = std::uniform_int_distribution<size_t>(0, open.size() - 1)(rng);
    const Vertex p = open[i];
    edges.push_back({p, v});
    if (++degree[p] == max_degree) {
      open[i] = open.back();
      open.pop_back();
    }
    degree[v] = 1;
    if (degree[v] < max_degree) open.push_back(v);
  }
  return relabel(n, std::move(edges), rng);
}

Forest random_tree_exact_delta(int32_t n, int32_t max_degree, uint64_t seed) {
  // Seed a star of the requested degree, then grow randomly under the cap.
  std::mt19937_64 rng(seed);
  if (n < max_degree + 1) return random_tree(n, max_degree, seed);
  std::vector<Edge> edges;
  std::vector<int32_t> degree(n, 0);
  for (Vertex v = 1; v <= max_degree; ++v) {
    edges.push_back({0, v});
    degree[v] = 1;
  }
  degree[0] = max_degree;
  std::vector<Vertex> open;
  for (Vertex v = 1; v <= max_degree; ++v) {
    if (degree[v] < max_degree) open.push_back(v);
  }
  for (Vertex v = max_degree + 1; v < n; ++v) {
    const size_t i = std::uniform_int_distribution<size_t>(0, open.size() - 1)(rng);
    const Vertex p = open[i];
    edges.push_back({p, v});
    if (++degree[p] == max_degree) {
      open[i] = open.back();
      open.pop_back();
    }
    degree[v] = 1;
    open.push_back(v);
  }
  return relabel(n, std::move(edges), rng);
}

Forest uniform_tree(int32_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  if (n <= 1) return Forest(std::max(n, 0), edges);
  if (n == 2) return Forest(2, {{0, 1}});
  std::vector<Vertex> code(n - 2);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (Vertex& c : code) c = pick(rng);
  std::vector<int32_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, c});
    if (--degree[c] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Forest(n, std::move(edges));
}

Forest path_forest(int32_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Forest(std::max(n, 0), std::move(edges));
}

std::vector<EdgeId> random_deletion_order(const Forest& forest, uint64_t seed) {
  std::vector<EdgeId> order(forest.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

std::vector<EdgeId> midpoint_deletion_order(int32_t edge_count) {
  std::vector<EdgeId> order;
  order.reserve(edge_count);
  // Breadth-first over intervals so early cuts are the most balanced.
  std::queue<std::pair<int32_t, int32_t>> ranges;  // half-open edge ranges
  if (edge_count > 0) ranges.push({0, edge_count});
  while (!ranges.empty()) {
    auto [lo, hi] = ranges.front();
    ranges.pop();
    const int32_t mid = lo + (hi - lo) / 2;
    order.push_back(mid);
    if (lo < mid) ranges.push({lo, mid});
    if (mid + 1 < hi) ranges.push({mid + 1, hi});
  }
  return order;
}

}  // namespace edgegame
