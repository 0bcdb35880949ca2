#include "modkernel/mask_graph.h"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "modkernel/errors.h"

namespace modkernel {

namespace {

int lowest(Mask m) { return std::countr_zero(m); }

}  // namespace

MaskGraph::MaskGraph(const Graph& g) : adj_(g.size(), 0) {
  if (g.size() > 64) throw RefusalError("mask routines support at most 64 vertices");
  for (int v = 0; v < g.size(); ++v) {
    for (int w : g.adjacent_indices(v)) adj_[v] |= Mask{1} << w;
  }
}

int MaskGraph::independence_number(Mask p) const {
  int taken = 0;
  while (p) {
    // Degree <= 1 vertices belong to some maximum independent set.
    bool reduced = false;
    for (Mask rest = p; rest; rest &= rest - 1) {
      int v = lowest(rest);
      if (std::popcount(adj_[v] & p) <= 1) {
        ++taken;
        p &= ~closed_neighbors(v);
        reduced = true;
        break;
      }
    }
    if (!reduced) break;
  }
  if (!p) return taken;

  int branch = -1;
  int best_degree = -1;
  for (Mask rest = p; rest; rest &= rest - 1) {
    int v = lowest(rest);
    int degree = std::popcount(adj_[v] & p);
    if (degree > best_degree) {
      best_degree = degree;
      branch = v;
    }
  }
  int without = independence_number(p & ~(Mask{1} << branch));
  int with = 1 + independence_number(p & ~closed_neighbors(branch));
  return taken + std::max(without, with);
}

std::vector<Mask> MaskGraph::maximum_independent_sets(Mask p) const {
  std::vector<Mask> out;
  const int target = independence_number(p);
  // Each branch is explored only if it can still reach `target`.
  auto recurse = [&](auto&& self, Mask rest, Mask chosen, int count) -> void {
    if (!rest) {
      if (count == target) out.push_back(chosen);
      return;
    }
    int v = lowest(rest);
    Mask include_rest = rest & ~closed_neighbors(v);
    if (count + 1 + independence_number(include_rest) == target) {
      self(self, include_rest, chosen | Mask{1} << v, count + 1);
    }
    Mask exclude_rest = rest & ~(Mask{1} << v);
    if (count + independence_number(exclude_rest) == target) {
      self(self, exclude_rest, chosen, count);
    }
  };
  recurse(recurse, p, 0, 0);
  return out;
}

std::vector<std::uint8_t> MaskGraph::independence_table() const {
  if (size() > 30) throw RefusalError("independence table needs at most 30 vertices");
  std::vector<std::uint8_t> table(std::size_t{1} << size(), 0);
  for (Mask s = 1; s < table.size(); ++s) {
    int v = lowest(s);
    Mask without = s & (s - 1);
    Mask with = without & ~adj_[v];
    table[s] = std::max<std::uint8_t>(table[without], 1 + table[with]);
  }
  return table;
}

int MaskGraph::maximum_matching(Mask p) const {
  std::unordered_map<Mask, int> memo;
  auto recurse = [&](auto&& self, Mask rest) -> int {
    // Drop isolated vertices.
    for (Mask r = rest; r; r &= r - 1) {
      int v = lowest(r);
      if (!(adj_[v] & rest)) rest &= ~(Mask{1} << v);
    }
    if (!rest) return 0;
    if (auto it = memo.find(rest); it != memo.end()) return it->second;
    int v = lowest(rest);
    int best = self(self, rest & ~(Mask{1} << v));
    for (Mask nb = adj_[v] & rest; nb; nb &= nb - 1) {
      int u = lowest(nb);
      best = std::max(best, 1 + self(self, rest & ~(Mask{1} << v) & ~(Mask{1} << u)));
    }
    memo.emplace(rest, best);
    return best;
  };
  return recurse(recurse, p);
}

Mask MaskGraph::to_mask(const Graph& g, const VertexSet& s) const {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << g.index_of(v);
  return m;
}

VertexSet MaskGraph::to_set(const Graph& g, Mask m) const {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(g.label(lowest(m)));
  return VertexSet(std::move(out));
}

}  // namespace modkernel
