#include "edgegame/star_model.hpp"

#include <algorithm>

namespace edgegame {

namespace {

ColourMask bit(Colour c) { return ColourMask{1} << c; }

// Cut branch i with colour c at the base.
StarModel cut(const StarModel& m, size_t i, Colour c) {
  StarModel out = m;
  out.branches.erase(out.branches.begin() + static_cast<std::ptrdiff_t>(i));
  out.at_base |= bit(c);
  ++out.gamma;
  return out;
}

bool repairable(const StarModel& m) {
  if (m.ok()) return true;
  const ColourMask full = ((ColourMask{1} << m.k) - 1) << 1;
  for (size_t i = 0; i < m.branches.size(); ++i) {
    for (ColourMask free = full & ~(m.at_base | m.branches[i].at_far); free != 0; free &= free - 1) {
      if (cut(m, i, __builtin_ctzll(free)).ok()) return true;
    }
  }
  return false;
}

}  // namespace

int32_t StarModel::unmatched() const {
  int32_t u = 0;
  for (const Branch& b : branches) {
    for (const Leaf& l : b.leaves) u += !(at_base & bit(l.colour));
  }
  return u;
}

int32_t StarModel::colours() const {
  ColourMask all = at_base;
  for (const Branch& b : branches) {
    for (const Leaf& l : b.leaves) all |= bit(l.colour);
  }
  return popcount(all);
}

bool StarModel::ok() const {
  // No free edge at the base: this side is fully coloured and retires.
  if (branches.empty()) return true;
  if (colours() > delta - 1) return false;
  return !relevant || unmatched() <= std::max(3 - gamma, 0);
}

bool StarModel::fragile() const {
  const ColourMask full = ((ColourMask{1} << k) - 1) << 1;
  for (size_t i = 0; i < branches.size(); ++i) {
    const Branch& b = branches[i];
    // Bob colours this base edge.
    for (ColourMask free = full & ~(at_base | b.at_far); free != 0; free &= free - 1) {
      if (!repairable(cut(*this, i, __builtin_ctzll(free)))) return true;
    }
    // Bob hangs a new leaf on the branch's first vertex. With leaves already
    // on the branch that vertex becomes a second base node and the repair
    // cuts the branch, which the cut moves above cover.
    if (!b.extendable || !b.leaves.empty()) continue;
    for (ColourMask free = full & ~b.at_far; free != 0; free &= free - 1) {
      const Colour c = __builtin_ctzll(free);
      StarModel next = *this;
      next.branches[i].leaves.push_back({c, true});
      next.branches[i].at_far |= bit(c);
      if (!repairable(next)) return true;
    }
  }
  return false;
}

StarModel make_star_model(const GameState& state, Vertex base, std::span<const LeafCopy> leaves,
                          const LeafCopy& extra, EdgeId played, Colour colour) {
  const LcaIndex& lca = state.lca();
  const Forest& forest = state.forest();
  StarModel m;
  m.delta = state.delta();
  m.k = state.k();
  m.relevant = forest.degree(base) == m.delta;
  std::vector<Vertex> first;
  std::vector<bool> down;
  for (EdgeId f : state.uncoloured_incident(base)) {
    if (f == played) continue;
    const Vertex y = forest.edge(f).other(base);
    StarModel::Branch br;
    br.at_far = state.colours_at(y);
    int32_t spare = state.live_degree(y) - 1;
    if (played >= 0 && (forest.edge(played).u == y || forest.edge(played).v == y)) {
      br.at_far |= bit(colour);
      --spare;
    }
    if (extra.edge >= 0 && extra.attach == y) br.at_far |= bit(extra.colour);
    br.extendable = spare > 0;
    m.branches.push_back(std::move(br));
    first.push_back(y);
    down.push_back(lca.parent(y) == base);
  }
  auto place = [&](const LeafCopy& l) {
    if (l.attach == base) {
      m.at_base |= bit(l.colour);
      ++m.gamma;
      return;
    }
    for (size_t i = 0; i < first.size(); ++i) {
      const bool beyond = down[i] ? lca.is_ancestor(first[i], l.attach) : !lca.is_ancestor(base, l.attach);
      if (beyond) {
        m.branches[i].leaves.push_back({l.colour, l.attach == first[i]});
        return;
      }
    }
  };
  for (const LeafCopy& l : leaves) place(l);
  if (extra.edge >= 0) place(extra);
  return m;
}

}  // namespace edgegame
