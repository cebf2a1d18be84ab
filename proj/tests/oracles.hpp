#pragma once

// Reference implementations used only to check the library: slow, direct,
// and sharing no code with it.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "edgegame/forest.hpp"
#include "edgegame/game_state.hpp"

namespace oracles {

using namespace edgegame;


// Plain minimax over all colours, memoised on the raw colouring. No symmetry
// reduction, no shared code with the library solver.
class Brute {
 public:
  Brute(const Forest& f, int k, bool skips) : f_(f), k_(k), skips_(skips) {}

  bool alice_wins(std::vector<int> col, bool alice_to_move) {
    std::string key(col.begin(), col.end());
    key.push_back(alice_to_move ? 'A' : 'B');
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result;
    bool any_open = false, any_dead = false;
    for (EdgeId e = 0; e < f_.edge_count(); ++e) {
      if (col[e]) continue;
      any_open = true;
      any_dead |= options(col, e).empty();
    }
    if (!any_open) {
      result = true;
    } else if (any_dead) {
      result = false;
    } else if (alice_to_move) {
      result = false;
      for (EdgeId e = 0; e < f_.edge_count() && !result; ++e) {
        if (col[e]) continue;
        for (int c : options(col, e)) {
          col[e] = c;
          result = alice_wins(col, false);
          col[e] = 0;
          if (result) break;
        }
      }
    } else {
      result = !skips_ || alice_wins(col, true);
      for (EdgeId e = 0; e < f_.edge_count() && result; ++e) {
        if (col[e]) continue;
        for (int c : options(col, e)) {
          col[e] = c;
          result = alice_wins(col, true);
          col[e] = 0;
          if (!result) break;
        }
      }
    }
    memo_[key] = result;
    return result;
  }

 private:
  std::vector<int> options(const std::vector<int>& col, EdgeId e) const {
    std::set<int> used;
    for (Vertex v : {f_.edge(e).u, f_.edge(e).v}) {
      for (EdgeId g : f_.incident(v)) used.insert(col[g]);
    }
    std::vector<int> out;
    for (int c = 1; c <= k_; ++c) {
      if (!used.count(c)) out.push_back(c);
    }
    return out;
  }

  const Forest& f_;
  int k_;
  bool skips_;
  std::map<std::string, bool> memo_;
};

inline bool brute_alice(const Forest& f, int k, Player first, bool skips) {
  Brute b(f, k, skips);
  return b.alice_wins(std::vector<int>(f.edge_count(), 0), first == Player::kAlice);
}

inline int brute_index(const Forest& f, bool skips) {
  if (f.edge_count() == 0) return 0;
  for (int k = 1;; ++k) {
    if (brute_alice(f, k, Player::kAlice, skips) && brute_alice(f, k, Player::kBob, skips)) return k;
  }
}

// Canonical form independent of the library: the smallest rooted encoding
// over every choice of root.
inline std::string all_roots_form(const Forest& f) {
  std::function<std::string(Vertex, Vertex)> enc = [&](Vertex v, Vertex from) {
    std::vector<std::string> kids;
    for (EdgeId e : f.incident(v)) {
      const Vertex w = f.edge(e).other(v);
      if (w != from) kids.push_back(enc(w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (Vertex r = 0; r < f.vertex_count(); ++r) {
    std::string s = enc(r, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

inline Forest from_pruefer(int n, const std::vector<int>& seq) {
  std::vector<int> deg(n, 1);
  for (int x : seq) ++deg[x];
  std::vector<Edge> edges;
  for (int x : seq) {
    for (int v = 0; v < n; ++v) {
      if (deg[v] == 1) {
        edges.push_back({v, x});
        --deg[v];
        --deg[x];
        break;
      }
    }
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 1) last.push_back(v);
  }
  edges.push_back({last[0], last[1]});
  return Forest(n, edges);
}

// Isomorphism classes among all labelled trees on n vertices.
inline size_t labelled_count(int n) {
  if (n <= 2) return 1;
  std::set<std::string> forms;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    forms.insert(all_roots_form(from_pruefer(n, seq)));
    int i = 0;
    while (i < n - 2 && ++seq[i] == n) seq[i++] = 0;
    if (i == n - 2) break;
  }
  return forms.size();
}


// Isomorphism classes on n vertices, grown from the classes on n-1 by adding
// a leaf everywhere; returns one representative per class for each size.
inline std::vector<std::vector<Forest>> classes_by_extension(int n_max) {
  std::vector<std::vector<Forest>> out(n_max + 1);
  out[1].push_back(Forest(1, {}));
  for (int n = 2; n <= n_max; ++n) {
    std::map<std::string, Forest> seen;
    for (const Forest& t : out[n - 1]) {
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        std::vector<Edge> edges(t.edges().begin(), t.edges().end());
        edges.push_back({v, n - 1});
        Forest g(n, edges);
        seen.emplace(all_roots_form(g), std::move(g));
      }
    }
    for (auto& [form, g] : seen) out[n].push_back(std::move(g));
  }
  return out;
}

// Component id per vertex from a union-find over the edges still present.
inline std::vector<int32_t> components_without(const Forest& f, const std::vector<bool>& gone) {
  std::vector<int32_t> up(f.vertex_count());
  std::iota(up.begin(), up.end(), 0);
  auto root = [&](int32_t v) {
    while (up[v] != v) v = up[v] = up[up[v]];
    return v;
  };
  for (EdgeId e = 0; e < f.edge_count(); ++e) {
    if (!gone[e]) up[root(f.edge(e).u)] = root(f.edge(e).v);
  }
  std::vector<int32_t> out(f.vertex_count());
  for (Vertex v = 0; v < f.vertex_count(); ++v) out[v] = root(v);
  return out;
}

}  // namespace oracles
