#include "edgegame/decremental_forest.hpp"

#include <bit>
#include <cmath>

namespace edgegame {

std::string_view to_string(DecrementalVariant variant) {
  return variant == DecrementalVariant::kBaseline ? "baseline" : "two-level";
}

DecrementalVariant parse_variant(std::string_view text) {
  if (text == "baseline") return DecrementalVariant::kBaseline;
  if (text == "two-level" || text == "two_level") return DecrementalVariant::kTwoLevel;
  throw GameError(ErrorCode::kParse, "unknown variant '" + std::string(text) + "'");
}

DecrementalForest::DecrementalForest(const Forest& forest, DecrementalVariant variant)
    : forest_(&forest), variant_(variant) {
  const int32_t n = forest.vertex_count();
  const int32_t m = forest.edge_count();
  deleted_.assign(m, 0);
  adj_start_.assign(n + 1, 0);
  live_count_.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) adj_start_[v + 1] = adj_start_[v] + forest.degree(v);
  live_adj_.resize(adj_start_[n]);
  adj_pos_.resize(2 * static_cast<size_t>(m));
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = forest.edge(e);
    adj_pos_[2 * e] = live_count_[ed.u];
    live_adj_[adj_start_[ed.u] + live_count_[ed.u]++] = e;
    adj_pos_[2 * e + 1] = live_count_[ed.v];
    live_adj_[adj_start_[ed.v] + live_count_[ed.v]++] = e;
  }
  next_label_ = forest.tree_count();

  if (variant == DecrementalVariant::kBaseline) {
    label_.resize(n);
    for (Vertex v = 0; v < n; ++v) label_[v] = forest.tree_of(v);
    return;
  }

  threshold_ = n <= 1 ? 1 : std::max(1, static_cast<int32_t>(std::ceil(0.5 * std::log2(n))));

  // Root each tree at its smallest vertex; postorder accumulation of
  // unclustered subtree sizes marks cluster roots.
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<uint8_t> seen(n, 0);
  std::vector<Vertex> stack;
  for (Vertex r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    stack.push_back(r);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (EdgeId e : forest.incident(v)) {
        Vertex w = forest.edge(e).other(v);
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<int32_t> pending(n, 1);
  std::vector<uint8_t> cluster_root(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    if (pending[v] >= threshold_ || parent[v] < 0) {
      cluster_root[v] = 1;
    } else {
      pending[parent[v]] += pending[v];
    }
  }
  cluster_of_.assign(n, -1);
  for (Vertex v : order) {
    cluster_of_[v] = cluster_root[v] ? cluster_count_++ : cluster_of_[parent[v]];
  }

  piece_.resize(n);
  piece_label_.resize(cluster_count_);
  piece_size_.assign(cluster_count_, 0);
  boundary_.resize(cluster_count_);
  for (Vertex v = 0; v < n; ++v) {
    piece_[v] = cluster_of_[v];
    piece_label_[cluster_of_[v]] = forest.tree_of(v);
    ++piece_size_[cluster_of_[v]];
  }
  boundary_pos_.assign(2 * static_cast<size_t>(m), -1);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = forest.edge(e);
    if (cluster_of_[ed.u] == cluster_of_[ed.v]) continue;
    boundary_add(piece_[ed.u], e, 0);
    boundary_add(piece_[ed.v], e, 1);
  }
}

void DecrementalForest::boundary_add(int32_t piece, EdgeId e, int side) {
  boundary_pos_[2 * e + side] = static_cast<int32_t>(boundary_[piece].size());
  boundary_[piece].push_back(e);
}

void DecrementalForest::boundary_remove(int32_t piece, EdgeId e, int side) {
  auto& list = boundary_[piece];
  const int32_t slot = boundary_pos_[2 * e + side];
  const EdgeId moved = list.back();
  list[slot] = moved;
  list.pop_back();
  if (moved != e) {
    const Edge& med = forest_->edge(moved);
    // The moved edge has exactly one endpoint in this piece.
    const int mside = piece_[med.u] == piece ? 0 : 1;
    boundary_pos_[2 * moved + mside] = slot;
  }
  boundary_pos_[2 * e + side] = -1;
}

void DecrementalForest::unlink(EdgeId e) {
  const Edge& ed = forest_->edge(e);
  for (int side = 0; side < 2; ++side) {
    const Vertex x = side == 0 ? ed.u : ed.v;
    const int32_t slot = adj_pos_[2 * e + side];
    const int32_t last = --live_count_[x];
    const EdgeId moved = live_adj_[adj_start_[x] + last];
    live_adj_[adj_start_[x] + slot] = moved;
    adj_pos_[2 * moved + (forest_->edge(moved).u == x ? 0 : 1)] = slot;
  }
  deleted_[e] = 1;
}

// Lockstep traversal from a and b. Returns true when a's side is the one to
// relabel: strictly fewer nodes, or equal size and the smaller minimum node.
template <class Expand>
bool DecrementalForest::smaller_side(int32_t a, int32_t b, Side& sa, Side& sb, Expand&& expand) {
  for (Side* s : {&sa, &sb}) {
    s->stack.clear();
    s->visited.clear();
    s->min_node = INT32_MAX;
  }
  sa.stack.push_back({a, -1});
  sb.stack.push_back({b, -1});
  auto step = [&](Side& s) {
    auto [x, from] = s.stack.back();
    s.stack.pop_back();
    s.visited.push_back(x);
    s.min_node = std::min(s.min_node, x);
    ++steps_;
    expand(x, from, [&](int32_t y) {
      s.stack.push_back({y, x});
      ++steps_;
    });
  };
  while (true) {
    step(sa);
    if (sa.done()) break;
    step(sb);
    if (sb.done()) break;
  }
  Side& finished = sa.done() ? sa : sb;
  Side& other = sa.done() ? sb : sa;
  while (!other.done() && other.visited.size() <= finished.visited.size()) step(other);
  if (!other.done() || other.visited.size() != finished.visited.size()) return &finished == &sa;
  return sa.min_node < sb.min_node;
}

SplitReport DecrementalForest::delete_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= forest_->vertex_count() || v >= forest_->vertex_count()) {
    throw GameError(ErrorCode::kBadVertexIndex, "vertex out of range");
  }
  for (EdgeId e : forest_->incident(u)) {
    if (forest_->edge(e).other(u) == v) return delete_edge(e);
  }
  throw GameError(ErrorCode::kUnknownEdge,
                  "no edge " + std::to_string(u) + " " + std::to_string(v));
}

SplitReport DecrementalForest::delete_edge(EdgeId e) {
  if (!forest_->is_valid_edge(e)) throw GameError(ErrorCode::kUnknownEdge, "unknown edge id");
  if (deleted_[e]) {
    throw GameError(ErrorCode::kEdgeAlreadyDeleted, "edge " + std::to_string(e) + " already deleted");
  }
  unlink(e);
  return variant_ == DecrementalVariant::kBaseline ? delete_baseline(e) : delete_two_level(e);
}

SplitReport DecrementalForest::delete_baseline(EdgeId e) {
  const Edge& ed = forest_->edge(e);
  auto expand = [&](int32_t x, int32_t from, auto&& push) {
    for (EdgeId f : live_incident(x)) {
      Vertex y = forest_->edge(f).other(x);
      if (y != from) push(y);
    }
  };
  const bool u_smaller = smaller_side(ed.u, ed.v, side_a_, side_b_, expand);
  const Side& small = u_smaller ? side_a_ : side_b_;
  SplitReport report;
  report.kept_label = label_[ed.u];
  report.new_label = next_label_++;
  report.smaller_side_size = static_cast<int32_t>(small.visited.size());
  for (int32_t x : small.visited) label_[x] = report.new_label;
  relabels_ += small.visited.size();
  return report;
}

SplitReport DecrementalForest::delete_two_level(EdgeId e) {
  const Edge& ed = forest_->edge(e);
  if (cluster_of_[ed.u] != cluster_of_[ed.v]) {
    boundary_remove(piece_[ed.u], e, 0);
    boundary_remove(piece_[ed.v], e, 1);
    return split_pieces(piece_[ed.u], piece_[ed.v]);
  }

  // Inside one cluster: split its piece with the baseline rule, restricted to
  // intra-cluster edges.
  const int32_t cluster = cluster_of_[ed.u];
  auto expand = [&](int32_t x, int32_t from, auto&& push) {
    for (EdgeId f : live_incident(x)) {
      Vertex y = forest_->edge(f).other(x);
      if (y != from && cluster_of_[y] == cluster) push(y);
    }
  };
  const bool u_smaller = smaller_side(ed.u, ed.v, side_a_, side_b_, expand);
  const Side& small = u_smaller ? side_a_ : side_b_;
  const int32_t old_piece = piece_[ed.u];
  const int32_t new_piece = static_cast<int32_t>(piece_label_.size());
  piece_label_.push_back(piece_label_[old_piece]);
  piece_size_.push_back(static_cast<int32_t>(small.visited.size()));
  piece_size_[old_piece] -= static_cast<int32_t>(small.visited.size());
  boundary_.emplace_back();
  relabels_ += small.visited.size() + 1;
  for (int32_t x : small.visited) {
    auto live = live_incident(x);
    for (EdgeId f : live) {
      const Edge& fd = forest_->edge(f);
      if (cluster_of_[fd.other(x)] != cluster) boundary_remove(old_piece, f, fd.u == x ? 0 : 1);
    }
    piece_[x] = new_piece;
    for (EdgeId f : live) {
      const Edge& fd = forest_->edge(f);
      if (cluster_of_[fd.other(x)] != cluster) boundary_add(new_piece, f, fd.u == x ? 0 : 1);
    }
  }
  return split_pieces(piece_[ed.u], piece_[ed.v]);
}

SplitReport DecrementalForest::split_pieces(int32_t pa, int32_t pb) {
  auto expand = [&](int32_t p, int32_t from, auto&& push) {
    for (EdgeId f : boundary_[p]) {
      const Edge& fd = forest_->edge(f);
      const int32_t q = piece_[fd.u] == p ? piece_[fd.v] : piece_[fd.u];
      if (q != from) push(q);
    }
  };
  const bool a_smaller = smaller_side(pa, pb, side_a_, side_b_, expand);
  const Side& small = a_smaller ? side_a_ : side_b_;
  SplitReport report;
  report.kept_label = piece_label_[a_smaller ? pb : pa];
  report.new_label = next_label_++;
  report.smaller_side_size = static_cast<int32_t>(small.visited.size());
  for (int32_t p : small.visited) piece_label_[p] = report.new_label;
  relabels_ += small.visited.size();
  return report;
}

}  // namespace edgegame
