#include <algorithm>
#include <queue>
#include <random>

#include "doctest.h"
#include "edgegame/lca_index.hpp"
#include "edgegame/random_trees.hpp"

using namespace edgegame;

namespace {

// Parents and depths by BFS from the smallest vertex of each tree.
struct Naive {
  std::vector<Vertex> parent;
  std::vector<int32_t> depth;
  std::vector<std::vector<Vertex>> adj;

  explicit Naive(const Forest& f) : parent(f.vertex_count(), -1), depth(f.vertex_count(), -1), adj(f.vertex_count()) {
    for (const Edge& e : f.edges()) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (Vertex r = 0; r < f.vertex_count(); ++r) {
      if (depth[r] >= 0) continue;
      depth[r] = 0;
      std::queue<Vertex> q;
      q.push(r);
      while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        for (Vertex w : adj[v]) {
          if (depth[w] >= 0) continue;
          depth[w] = depth[v] + 1;
          parent[w] = v;
          q.push(w);
        }
      }
    }
  }

  Vertex lca(Vertex u, Vertex v) const {
    while (depth[u] > depth[v]) u = parent[u];
    while (depth[v] > depth[u]) v = parent[v];
    while (u != v) {
      u = parent[u];
      v = parent[v];
    }
    return u;
  }

  // Path by BFS from v, then walk back from w.
  std::vector<Vertex> path(Vertex v, Vertex w) const {
    std::vector<Vertex> from(adj.size(), -2);
    std::queue<Vertex> q;
    q.push(v);
    from[v] = -1;
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (Vertex y : adj[x]) {
        if (from[y] != -2) continue;
        from[y] = x;
        q.push(y);
      }
    }
    std::vector<Vertex> out;
    for (Vertex x = w; x != -1; x = from[x]) out.push_back(x);
    std::reverse(out.begin(), out.end());
    return out;
  }
};

}  // namespace

TEST_CASE("lca and level ancestor agree with parent walking") {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    const int32_t n = 2 + static_cast<int32_t>(seed * 37 % 400);
    const Forest f = seed % 3 == 0 ? uniform_tree(n, seed) : random_tree(n, 2 + static_cast<int32_t>(seed % 4), seed);
    const LcaIndex idx(f);
    const Naive nv(f);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    for (int q = 0; q < 300; ++q) {
      const Vertex u = pick(rng), v = pick(rng);
      REQUIRE(idx.lca(u, v) == nv.lca(u, v));
      CHECK(idx.depth(u) == nv.depth[u]);
      CHECK(idx.parent(u) == nv.parent[u]);
      const int32_t d = std::uniform_int_distribution<int32_t>(0, nv.depth[u])(rng);
      Vertex a = u;
      while (nv.depth[a] > d) a = nv.parent[a];
      REQUIRE(idx.level_ancestor(u, d) == a);
      CHECK(idx.is_ancestor(a, u));
    }
  }
}

TEST_CASE("next_on_path and distance agree with BFS paths") {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    const int32_t n = 3 + static_cast<int32_t>(seed * 13 % 120);
    const Forest f = random_tree(n, 5, seed);
    const LcaIndex idx(f);
    const Naive nv(f);
    for (Vertex v = 0; v < n; v += 3) {
      for (Vertex w = 0; w < n; w += 5) {
        if (v == w) continue;
        const auto p = nv.path(v, w);
        REQUIRE(idx.next_on_path(v, w) == p[1]);
        CHECK(idx.distance(v, w) == static_cast<int32_t>(p.size()) - 1);
      }
    }
  }
}

TEST_CASE("lca across trees throws") {
  const Forest f = load_forest("4\n0 1\n2 3");
  const LcaIndex idx(f);
  CHECK(!idx.same_tree(0, 2));
  CHECK_THROWS_AS(idx.next_on_path(0, 3), GameError);
}

TEST_CASE("query counter counts lca and level ancestor only") {
  const Forest f = path_forest(100);
  const LcaIndex idx(f);
  LcaIndex::reset_query_count();
  idx.lca(10, 20);
  idx.level_ancestor(50, 3);
  idx.is_ancestor(1, 2);
  idx.parent(5);
  CHECK(LcaIndex::query_count() == 2);
}

TEST_CASE("deep path uses the ladders") {
  const Forest f = path_forest(100000);
  const LcaIndex idx(f);
  CHECK(idx.level_ancestor(99999, 0) == 0);
  CHECK(idx.level_ancestor(99999, 12345) == 12345);
  CHECK(idx.lca(70000, 99999) == 70000);
  CHECK(idx.next_on_path(500, 10) == 499);
  CHECK(idx.next_on_path(500, 90000) == 501);
}
