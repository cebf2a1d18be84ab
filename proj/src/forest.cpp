#include "edgegame/forest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace edgegame {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kBadVertexIndex: return "BadVertexIndex";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kEdgeAlreadyColoured: return "EdgeAlreadyColoured";
    case ErrorCode::kImproperColour: return "ImproperColour";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kDifferentComponents: return "DifferentComponents";
    case ErrorCode::kEdgeAlreadyDeleted: return "EdgeAlreadyDeleted";
    case ErrorCode::kNoUniqueBaseNode: return "NoUniqueBaseNode";
    case ErrorCode::kNoUncolouredEdge: return "NoUncolouredEdge";
    case ErrorCode::kStrategyStuck: return "StrategyStuck";
    case ErrorCode::kUnsupportedDelta: return "UnsupportedDelta";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kBobStuck: return "BobStuck";
  }
  return "Unknown";
}

namespace {

// Plain union-find used only for validation.
struct Dsu {
  std::vector<int32_t> parent;
  explicit Dsu(int32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int32_t find(int32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Forest::Forest(int32_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw GameError(ErrorCode::kBadVertexIndex, "negative vertex count");
  std::unordered_set<uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  Dsu dsu(n);
  std::vector<int32_t> deg(n, 0);
  for (size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GameError(ErrorCode::kBadVertexIndex,
                      "edge " + std::to_string(i) + " has an endpoint outside 0.." +
                          std::to_string(n - 1));
    }
    uint64_t key = (static_cast<uint64_t>(std::min(u, v)) << 32) | static_cast<uint32_t>(std::max(u, v));
    if (u == v || !seen.insert(key).second) {
      if (u == v) throw GameError(ErrorCode::kCycleDetected, "self-loop at vertex " + std::to_string(u));
      throw GameError(ErrorCode::kDuplicateEdge,
                      "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    if (!dsu.unite(u, v)) {
      throw GameError(ErrorCode::kCycleDetected,
                      "edge " + std::to_string(u) + " " + std::to_string(v) + " closes a cycle");
    }
    ++deg[u];
    ++deg[v];
  }
  adj_start_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) adj_start_[v + 1] = adj_start_[v] + deg[v];
  adj_.resize(adj_start_[n]);
  std::vector<int32_t> fill(adj_start_.begin(), adj_start_.end() - 1);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    adj_[fill[edges_[e].u]++] = e;
    adj_[fill[edges_[e].v]++] = e;
  }
  delta_ = n == 0 ? 0 : *std::max_element(deg.begin(), deg.end());

  tree_of_.assign(n, -1);
  std::vector<int32_t> root_tree(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    int32_t r = dsu.find(v);
    if (root_tree[r] < 0) root_tree[r] = tree_count_++;
    tree_of_[v] = root_tree[r];
  }
}

std::string Forest::to_text() const {
  std::ostringstream out;
  out << n_ << '\n';
  for (const auto& e : edges_) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

uint64_t Forest::hash() const {
  uint64_t h = 1469598103934665603ULL;
  for (char c : to_text()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

Forest load_forest(std::string_view text) {
  std::vector<int64_t> values;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\n' || *p == '\r')) ++p;
    if (p == end) break;
    int64_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc()) {
      throw GameError(ErrorCode::kParse, "unexpected token in tree file near offset " +
                                             std::to_string(p - text.data()));
    }
    values.push_back(value);
    p = next;
  }
  if (values.empty()) throw GameError(ErrorCode::kParse, "empty tree file");
  if (values.size() % 2 != 1) throw GameError(ErrorCode::kParse, "edge line with a single endpoint");
  int64_t n = values[0];
  if (n < 0 || n > INT32_MAX) throw GameError(ErrorCode::kBadVertexIndex, "bad vertex count");
  std::vector<Edge> edges;
  edges.reserve(values.size() / 2);
  for (size_t i = 1; i + 1 < values.size(); i += 2) {
    if (values[i] < 0 || values[i] >= n || values[i + 1] < 0 || values[i + 1] >= n) {
      throw GameError(ErrorCode::kBadVertexIndex,
                      "edge " + std::to_string(i / 2) + " has an endpoint out of range");
    }
    edges.push_back({static_cast<Vertex>(values[i]), static_cast<Vertex>(values[i + 1])});
  }
  return Forest(static_cast<int32_t>(n), std::move(edges));
}

Forest load_forest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GameError(ErrorCode::kParse, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_forest(buf.str());
}

}  // namespace edgegame
