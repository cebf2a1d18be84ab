#include "edgegame/oracle.hpp"

#include "edgegame/component.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <unordered_map>

namespace edgegame {

std::string_view to_string(Winner w) { return w == Winner::kAlice ? "AliceWins" : "BobWins"; }

namespace {

class Solver {
 public:
  Solver(const Forest& forest, const SolveConfig& config) : config_(config) {
    const int32_t m = forest.edge_count();
    neighbours_.assign(m, 0);
    for (EdgeId e = 0; e < m; ++e) {
      for (Vertex x : {forest.edge(e).u, forest.edge(e).v}) {
        for (EdgeId f : forest.incident(x)) {
          if (f != e) neighbours_[e] |= 1u << f;
        }
      }
    }
  }

  // Children of a position: (colouring, mover) pairs reachable in one move.
  std::vector<std::pair<std::vector<Colour>, Player>> children(const std::vector<Colour>& col,
                                                                Player mover) const {
    std::vector<std::pair<std::vector<Colour>, Player>> out;
    for_each_move(col, [&](EdgeId e, Colour c) {
      std::vector<Colour> next = col;
      next[e] = c;
      out.push_back({std::move(next), opponent(mover)});
      return false;
    });
    if (mover == Player::kBob && config_.bob_may_skip) out.push_back({col, Player::kAlice});
    return out;
  }

  // Terminal value, if any: nothing uncoloured -> Alice, dead edge -> Bob.
  std::optional<bool> terminal(const std::vector<Colour>& col) const {
    bool open = false;
    for (size_t e = 0; e < col.size(); ++e) {
      if (col[e] != kNoColour) continue;
      open = true;
      if (popcount(used_around(col, static_cast<EdgeId>(e))) >= config_.k) return false;
    }
    if (!open) return true;
    return std::nullopt;
  }

  bool alice_wins(std::vector<Colour>& col, Player mover) {
    if (auto t = terminal(col)) return *t;
    const uint64_t k = key(col, mover);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    ++positions_;
    bool result;
    if (mover == Player::kAlice) {
      result = false;
      for_each_move(col, [&](EdgeId e, Colour c) {
        col[e] = c;
        result = alice_wins(col, Player::kBob);
        col[e] = kNoColour;
        return result;
      });
    } else {
      result = true;
      for_each_move(col, [&](EdgeId e, Colour c) {
        col[e] = c;
        result = alice_wins(col, Player::kAlice);
        col[e] = kNoColour;
        return !result;
      });
      if (result && config_.bob_may_skip) result = alice_wins(col, Player::kAlice);
    }
    memo_.emplace(k, result);
    return result;
  }

  int64_t positions() const { return positions_; }

 private:
  ColourMask used_around(const std::vector<Colour>& col, EdgeId e) const {
    ColourMask used = 0;
    for (uint32_t m = neighbours_[e]; m != 0; m &= m - 1) {
      const Colour c = col[__builtin_ctz(m)];
      if (c != kNoColour) used |= ColourMask{1} << c;
    }
    return used >> 1;  // bit i-1 <=> colour i
  }

  // Visits legal (edge, colour) pairs until the callback returns true.
  // Colours not used anywhere yet are interchangeable, so only the smallest
  // of them is tried.
  template <class Fn>
  void for_each_move(const std::vector<Colour>& col, Fn&& fn) const {
    ColourMask anywhere = 0;
    for (Colour c : col) {
      if (c != kNoColour) anywhere |= ColourMask{1} << (c - 1);
    }
    const ColourMask all = (ColourMask{1} << config_.k) - 1;
    const ColourMask unused = all & ~anywhere;
    const ColourMask tried = anywhere | (unused & (~unused + 1));
    for (size_t e = 0; e < col.size(); ++e) {
      if (col[e] != kNoColour) continue;
      ColourMask options = tried & ~used_around(col, static_cast<EdgeId>(e));
      for (; options != 0; options &= options - 1) {
        if (fn(static_cast<EdgeId>(e), static_cast<Colour>(__builtin_ctzll(options) + 1))) return;
      }
    }
  }

  // Colours renamed in first-use order, four bits per edge, mover on top.
  static uint64_t key(const std::vector<Colour>& col, Player mover) {
    Colour rename[64] = {};
    Colour next = 1;
    uint64_t k = mover == Player::kAlice ? 0 : uint64_t{1} << 63;
    for (size_t e = 0; e < col.size(); ++e) {
      Colour c = col[e];
      if (c != kNoColour) {
        if (rename[c] == 0) rename[c] = next++;
        c = rename[c];
      }
      k |= static_cast<uint64_t>(c) << (4 * e);
    }
    return k;
  }

  SolveConfig config_;
  std::vector<uint32_t> neighbours_;
  std::unordered_map<uint64_t, bool> memo_;
  int64_t positions_ = 0;
};

void check_cap(const Forest& forest, const SolveConfig& config) {
  if (forest.edge_count() > config.edge_cap || forest.edge_count() > 15) {
    throw GameError(ErrorCode::kCapExceeded, "solver capped at " + std::to_string(config.edge_cap) +
                                                 " edges, forest has " +
                                                 std::to_string(forest.edge_count()));
  }
  if (config.k < 1 || config.k > 15) throw GameError(ErrorCode::kCapExceeded, "solver needs 1 <= k <= 15");
}

}  // namespace

Winner solve_from(const Forest& forest, std::span<const Colour> colouring, Player to_move,
                  const SolveConfig& config, SolveStats* stats) {
  check_cap(forest, config);
  std::vector<Colour> col(colouring.begin(), colouring.end());
  col.resize(forest.edge_count(), kNoColour);
  Solver root(forest, config);
  bool alice;
  if (config.threads <= 1) {
    alice = root.alice_wins(col, to_move);
    if (stats) stats->positions += root.positions();
  } else if (auto t = root.terminal(col)) {
    alice = *t;
  } else {
    auto kids = root.children(col, to_move);
    std::vector<std::future<std::pair<bool, int64_t>>> jobs;
    for (auto& [next, mover] : kids) {
      jobs.push_back(std::async(std::launch::async, [&forest, &config, next, mover]() mutable {
        Solver s(forest, config);
        const bool r = s.alice_wins(next, mover);
        return std::pair{r, s.positions()};
      }));
    }
    alice = to_move == Player::kBob;
    for (auto& j : jobs) {
      auto [r, pos] = j.get();
      if (stats) stats->positions += pos;
      if (to_move == Player::kAlice) alice = alice || r;
      else alice = alice && r;
    }
  }
  return alice ? Winner::kAlice : Winner::kBob;
}

Winner solve(const Forest& forest, const SolveConfig& config, SolveStats* stats) {
  std::vector<Colour> empty(forest.edge_count(), kNoColour);
  return solve_from(forest, empty, config.first_player, config, stats);
}

int32_t game_chromatic_index(const Forest& forest, bool bob_may_skip, int32_t edge_cap) {
  if (forest.edge_count() == 0) return 0;
  // Every edge has at most 2(delta-1) neighbours, so 2*delta-1 colours always suffice.
  const int32_t upper = std::max(1, 2 * forest.delta() - 1);
  for (int32_t k = 1; k <= upper; ++k) {
    bool both = true;
    for (Player first : {Player::kAlice, Player::kBob}) {
      SolveConfig cfg{k, first, bob_may_skip, edge_cap, 1};
      if (solve(forest, cfg) != Winner::kAlice) {
        both = false;
        break;
      }
    }
    if (both) return k;
  }
  return upper;
}

namespace {

std::string encode(const std::vector<std::vector<Vertex>>& adj, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : adj[v]) {
    if (w != parent) kids.push_back(encode(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& s : kids) out += s;
  out += ")";
  return out;
}

}  // namespace

std::string canonical_form(const Forest& tree) {
  const int32_t n = tree.vertex_count();
  if (n == 0) return "";
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : tree.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  // Strip leaves layer by layer; the last one or two vertices are the centres.
  std::vector<int32_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = static_cast<int32_t>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int32_t remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int32_t>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : adj[v]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string s = encode(adj, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

void for_each_tree(int32_t n, std::optional<int32_t> delta_filter,
                   const std::function<void(const Forest&)>& visit) {
  if (n <= 0) return;
  // Grow trees one leaf at a time, keeping one representative per form.
  std::map<std::string, std::vector<Edge>> level;
  level.emplace("()", std::vector<Edge>{});
  for (int32_t size = 2; size <= n; ++size) {
    std::map<std::string, std::vector<Edge>> next;
    for (const auto& [form, edges] : level) {
      for (Vertex v = 0; v < size - 1; ++v) {
        std::vector<Edge> grown = edges;
        grown.push_back({v, size - 1});
        Forest f(size, grown);
        next.emplace(canonical_form(f), std::move(grown));
      }
    }
    level = std::move(next);
  }
  for (const auto& [form, edges] : level) {
    Forest f(n, edges);
    if (delta_filter && f.delta() != *delta_filter) continue;
    visit(f);
  }
}

std::vector<Forest> enumerate_trees(int32_t n_max, std::optional<int32_t> delta_filter) {
  std::vector<Forest> out;
  for (int32_t n = 1; n <= n_max; ++n) {
    for_each_tree(n, delta_filter, [&](const Forest& f) { out.push_back(f); });
  }
  return out;
}

}  // namespace edgegame
