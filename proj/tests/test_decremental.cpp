#include <cmath>
#include <map>

#include "doctest.h"
#include "edgegame/decremental_forest.hpp"
#include "edgegame/random_trees.hpp"
#include "oracles.hpp"

using namespace edgegame;

namespace {

// Same partition, up to renaming.
bool same_partition(const DecrementalForest& df, const std::vector<int32_t>& truth) {
  std::map<int32_t, int32_t> fwd, back;
  for (Vertex v = 0; v < static_cast<Vertex>(truth.size()); ++v) {
    const int32_t a = df.find(v), b = truth[v];
    auto [i, fresh_a] = fwd.emplace(a, b);
    auto [j, fresh_b] = back.emplace(b, a);
    if (i->second != b || j->second != a) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("smaller side is relabelled") {
  const Forest p3 = load_forest("3\n0 1\n1 2");
  DecrementalForest df(p3, DecrementalVariant::kBaseline);
  const Vertex before = df.find(1);
  const SplitReport r = df.delete_edge(0, 1);
  CHECK(r.smaller_side_size == 1);
  CHECK(df.find(0) == r.new_label);
  CHECK(df.find(1) == before);
  CHECK(df.relabel_count() == 1);

  const Forest k14 = load_forest("5\n0 1\n0 2\n0 3\n0 4");
  DecrementalForest ds(k14, DecrementalVariant::kBaseline);
  const SplitReport s = ds.delete_edge(0, 3);
  CHECK(ds.find(3) == s.new_label);
  CHECK(ds.connected(0, 4));
  CHECK(!ds.connected(0, 3));
}

TEST_CASE("deleting twice throws") {
  const Forest p3 = load_forest("3\n0 1\n1 2");
  DecrementalForest df(p3, DecrementalVariant::kTwoLevel);
  df.delete_edge(0);
  CHECK_THROWS_AS(df.delete_edge(0), GameError);
}

TEST_CASE("find agrees with a fresh traversal after every deletion") {
  for (auto variant : {DecrementalVariant::kBaseline, DecrementalVariant::kTwoLevel}) {
    for (uint64_t seed = 1; seed <= 1000; ++seed) {
      const int32_t n = 2 + static_cast<int32_t>(seed * 7919 % 199);
      const Forest f = seed % 2 ? random_tree(n, 5, seed) : uniform_tree(n, seed);
      DecrementalForest df(f, variant);
      std::vector<bool> gone(f.edge_count(), false);
      for (EdgeId e : random_deletion_order(f, seed)) {
        df.delete_edge(e);
        gone[e] = true;
        REQUIRE_MESSAGE(same_partition(df, oracles::components_without(f, gone)),
                        to_string(variant) << " seed " << seed << " after edge " << e);
        CHECK(df.live_degree(f.edge(e).u) >= 0);
      }
    }
  }
}

TEST_CASE("live incidence lists track deletions") {
  const Forest f = random_tree(60, 4, 5);
  DecrementalForest df(f, DecrementalVariant::kBaseline);
  std::vector<bool> gone(f.edge_count(), false);
  for (EdgeId e : random_deletion_order(f, 5)) {
    df.delete_edge(e);
    gone[e] = true;
    for (Vertex v : {f.edge(e).u, f.edge(e).v}) {
      int32_t live = 0;
      for (EdgeId g : f.incident(v)) live += !gone[g];
      REQUIRE(df.live_degree(v) == live);
      for (EdgeId g : df.live_incident(v)) CHECK(!gone[g]);
    }
  }
}

TEST_CASE("relabel totals stay within their bounds") {
  for (int32_t n : {1 << 10, 1 << 12, 1 << 14}) {
    const Forest f = random_tree(n, 5, 77);
    const auto order = random_deletion_order(f, 77);
    DecrementalForest base(f, DecrementalVariant::kBaseline);
    DecrementalForest two(f, DecrementalVariant::kTwoLevel);
    for (EdgeId e : order) {
      base.delete_edge(e);
      two.delete_edge(e);
    }
    const double lg = std::log2(n);
    CHECK(base.relabel_count() <= n * lg);
    CHECK(two.relabel_count() <= 4 * n * std::log2(lg) + 8.0 * n);
  }
  // Balanced path cuts are the worst case for the smaller-side rule.
  const int32_t n = 1 << 14;
  const Forest p = path_forest(n);
  DecrementalForest base(p, DecrementalVariant::kBaseline);
  for (EdgeId e : midpoint_deletion_order(n - 1)) base.delete_edge(e);
  CHECK(base.relabel_count() <= n * std::log2(n));
}
