#include "edgegame/component.hpp"

#include <algorithm>

namespace edgegame {

namespace {

// Virtual (Steiner-branching) tree over the attachment vertices.
struct VirtualTree {
  std::vector<Vertex> nodes;      // preorder
  std::vector<int32_t> parent;    // index into nodes, -1 at the top
  std::vector<int32_t> leaves;    // coloured leaves attached at the node
  std::vector<int32_t> degree;    // degree in the induced sub-tree
};

VirtualTree build_virtual_tree(std::span<const LeafCopy> leaves, const LcaIndex& lca) {
  VirtualTree vt;
  std::vector<Vertex> terminals;
  terminals.reserve(leaves.size());
  for (const auto& l : leaves) terminals.push_back(l.attach);
  auto by_preorder = [&](Vertex a, Vertex b) { return lca.preorder(a) < lca.preorder(b); };
  std::sort(terminals.begin(), terminals.end(), by_preorder);
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  std::vector<Vertex> nodes = terminals;
  for (size_t i = 1; i < terminals.size(); ++i) nodes.push_back(lca.lca(terminals[i - 1], terminals[i]));
  std::sort(nodes.begin(), nodes.end(), by_preorder);
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  const size_t k = nodes.size();
  vt.nodes = nodes;
  vt.parent.assign(k, -1);
  vt.leaves.assign(k, 0);
  vt.degree.assign(k, 0);
  std::vector<int32_t> stack;
  for (size_t i = 0; i < k; ++i) {
    while (!stack.empty() && !lca.is_ancestor(nodes[stack.back()], nodes[i])) stack.pop_back();
    if (!stack.empty()) {
      vt.parent[i] = stack.back();
      ++vt.degree[i];
      ++vt.degree[stack.back()];
    }
    stack.push_back(static_cast<int32_t>(i));
  }
  for (const auto& l : leaves) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), l.attach, by_preorder);
    const auto idx = it - nodes.begin();
    ++vt.leaves[idx];
    ++vt.degree[idx];
  }
  return vt;
}

}  // namespace

std::vector<Vertex> base_nodes(std::span<const LeafCopy> leaves, const LcaIndex& lca) {
  std::vector<Vertex> out;
  if (leaves.size() < 3) return out;
  VirtualTree vt = build_virtual_tree(leaves, lca);
  for (size_t i = 0; i < vt.nodes.size(); ++i) {
    if (vt.degree[i] >= 3) out.push_back(vt.nodes[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Classification classify(std::span<const LeafCopy> leaves, Vertex base, const Forest& forest) {
  if (base < 0) {
    throw GameError(ErrorCode::kNoUniqueBaseNode, "classification needs a unique base node");
  }
  Classification c;
  ColourMask at_base = 0;
  for (const auto& l : leaves) {
    c.colours |= ColourMask{1} << l.colour;
    if (l.attach == base) {
      ++c.gamma;
      at_base |= ColourMask{1} << l.colour;
    }
  }
  for (const auto& l : leaves) {
    if (l.attach == base || (at_base >> l.colour & 1)) c.matched.push_back(l);
    else c.unmatched.push_back(l);
  }
  auto by_edge = [](const LeafCopy& a, const LeafCopy& b) { return a.edge < b.edge; };
  std::sort(c.matched.begin(), c.matched.end(), by_edge);
  std::sort(c.unmatched.begin(), c.unmatched.end(), by_edge);
  c.relevant = forest.degree(base) == forest.delta();
  return c;
}

bool check_m(const ComponentView& view) {
  if (!view.star_like || !view.relevant) return true;
  return view.unmatched_count() <= view.m_limit();
}

ComponentView analyze(ComponentLabel label, std::span<const LeafCopy> leaves, const Forest& forest,
                      const LcaIndex& lca) {
  ComponentView view;
  view.label = label;
  view.x = static_cast<int32_t>(leaves.size());
  for (const auto& l : leaves) view.colours |= ColourMask{1} << l.colour;
  view.colours_present = popcount(view.colours);
  if (view.x < 3) return view;

  VirtualTree vt = build_virtual_tree(leaves, lca);
  std::vector<int32_t> base_idx;
  for (size_t i = 0; i < vt.nodes.size(); ++i) {
    if (vt.degree[i] >= 3) base_idx.push_back(static_cast<int32_t>(i));
  }
  for (int32_t i : base_idx) view.base_nodes.push_back(vt.nodes[i]);
  std::sort(view.base_nodes.begin(), view.base_nodes.end());
  view.star_like = view.base_nodes.size() == 1;
  view.s_ok = view.star_like;

  if (view.star_like) {
    view.base = view.base_nodes.front();
    Classification c = classify(leaves, view.base, forest);
    view.gamma = c.gamma;
    view.matched = std::move(c.matched);
    view.unmatched = std::move(c.unmatched);
    view.relevant = c.relevant;
    view.m_ok = check_m(view);
    return view;
  }
  if (base_idx.size() < 2) return view;

  // Leaves per virtual subtree (nodes are in preorder, so children follow parents).
  const size_t k = vt.nodes.size();
  std::vector<int32_t> below(vt.leaves);
  for (size_t i = k; i-- > 1;) {
    if (vt.parent[i] >= 0) below[vt.parent[i]] += below[i];
  }
  int32_t v_idx = -1;
  int32_t w_idx = -1;
  if (base_idx.size() == 2) {
    int32_t a = base_idx[0];
    int32_t b = base_idx[1];
    if (vt.parent[b] == a || vt.parent[a] == b) {
      const int32_t child = vt.parent[b] == a ? b : a;
      const int32_t parent = child == b ? a : b;
      const int32_t child_side = below[child];
      const int32_t parent_side = view.x - child_side;
      bool parent_is_v = parent_side > child_side ||
                         (parent_side == child_side && vt.nodes[parent] < vt.nodes[child]);
      v_idx = parent_is_v ? parent : child;
      w_idx = parent_is_v ? child : parent;
    }
  }
  if (v_idx < 0) {
    // More than two base nodes: take the one with the largest induced degree
    // and, preferably, a base node adjacent to it in the virtual tree.
    v_idx = base_idx[0];
    for (int32_t i : base_idx) {
      if (vt.degree[i] > vt.degree[v_idx] ||
          (vt.degree[i] == vt.degree[v_idx] && vt.nodes[i] < vt.nodes[v_idx])) {
        v_idx = i;
      }
    }
    for (int32_t i : base_idx) {
      if (i == v_idx) continue;
      const bool adjacent = vt.parent[i] == v_idx || vt.parent[v_idx] == i;
      if (w_idx < 0 || adjacent) w_idx = i;
      if (adjacent) break;
    }
  }
  const Vertex v = vt.nodes[v_idx];
  const Vertex w = vt.nodes[w_idx];
  view.repair_base = v;
  view.repair_target = w;
  // A leaf attached at t lies beyond w iff the v -> t path passes through w.
  const bool w_below_v = lca.is_ancestor(v, w);
  auto beyond_w = [&](Vertex t) {
    if (t == v) return false;
    return w_below_v ? lca.is_ancestor(w, t) : !lca.is_ancestor(v, t);
  };
  ColourMask at_v = 0;
  for (const auto& l : leaves) {
    if (l.attach == v) at_v |= ColourMask{1} << l.colour;
  }
  for (const auto& l : leaves) {
    if (l.attach == v || (at_v >> l.colour & 1) || beyond_w(l.attach)) continue;
    view.repair_unmatched.push_back(l);
  }
  std::sort(view.repair_unmatched.begin(), view.repair_unmatched.end(),
            [](const LeafCopy& a, const LeafCopy& b) { return a.edge < b.edge; });
  return view;
}

ComponentSummary summarize(const ComponentView& view) {
  ComponentSummary s;
  s.label = view.label;
  s.x = view.x;
  s.star_like = view.star_like;
  s.s_ok = view.s_ok;
  s.m_ok = view.m_ok;
  s.gamma = view.gamma;
  s.unmatched = view.unmatched_count();
  s.colours = view.colours_present;
  s.relevant = view.relevant;
  s.base_nodes = view.base_nodes;
  return s;
}

}  // namespace edgegame
