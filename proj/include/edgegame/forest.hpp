#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edgegame {

using Vertex = int32_t;
using EdgeId = int32_t;
using Colour = int32_t;  // 1..k, 0 means uncoloured

inline constexpr Colour kNoColour = 0;

enum class ErrorCode {
  kCycleDetected,
  kBadVertexIndex,
  kDuplicateEdge,
  kParse,
  kEdgeAlreadyColoured,
  kImproperColour,
  kUnknownEdge,
  kDifferentComponents,
  kEdgeAlreadyDeleted,
  kNoUniqueBaseNode,
  kNoUncolouredEdge,
  kStrategyStuck,
  kUnsupportedDelta,
  kBudgetExceeded,
  kCapExceeded,
  kBobStuck,
};

std::string_view to_string(ErrorCode code);

class GameError : public std::runtime_error {
 public:
  GameError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Edge {
  Vertex u;
  Vertex v;
  Vertex other(Vertex w) const { return w == u ? v : u; }
};

// Immutable forest with dense, stable edge ids.
class Forest {
 public:
  Forest() = default;
  // Validates indices, duplicates and acyclicity; throws GameError.
  Forest(int32_t n, std::vector<Edge> edges);

  int32_t vertex_count() const { return n_; }
  int32_t edge_count() const { return static_cast<int32_t>(edges_.size()); }
  int32_t delta() const { return delta_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const {
    return {adj_.data() + adj_start_[v], adj_.data() + adj_start_[v + 1]};
  }
  int32_t degree(Vertex v) const { return adj_start_[v + 1] - adj_start_[v]; }
  bool is_valid_edge(EdgeId e) const { return e >= 0 && e < edge_count(); }

  // Original connected component of a vertex (0-based, ordered by smallest vertex).
  int32_t tree_of(Vertex v) const { return tree_of_[v]; }
  int32_t tree_count() const { return tree_count_; }

  // Text in the tree-file format: "n" then one "u v" line per edge.
  std::string to_text() const;
  // FNV-1a over the text form.
  uint64_t hash() const;

 private:
  int32_t n_ = 0;
  int32_t delta_ = 0;
  int32_t tree_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int32_t> adj_start_{0};
  std::vector<EdgeId> adj_;
  std::vector<int32_t> tree_of_;
};

Forest load_forest(std::string_view text);
Forest load_forest_file(const std::string& path);

}  // namespace edgegame
