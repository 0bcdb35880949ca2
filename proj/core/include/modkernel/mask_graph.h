#pragma once

#include <cstdint>
#include <vector>

#include "modkernel/graph.h"

namespace modkernel {

using Mask = std::uint64_t;

// Adjacency bitmasks over local indices, for exhaustive routines on graphs
// with at most 64 vertices.
class MaskGraph {
 public:
  explicit MaskGraph(const Graph& g);

  int size() const { return static_cast<int>(adj_.size()); }
  Mask all() const { return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }
  Mask neighbors(int v) const { return adj_[v]; }
  Mask closed_neighbors(int v) const { return adj_[v] | Mask{1} << v; }

  // Exact alpha(G[p]).
  int independence_number(Mask p) const;

  // Every maximum independent set of G[p], in lexicographic order of masks
  // taken lowest vertex first.
  std::vector<Mask> maximum_independent_sets(Mask p) const;

  // table[s] = alpha(G[s]) for every s; needs size() <= 30.
  std::vector<std::uint8_t> independence_table() const;

  // Maximum matching size of G[p] by exhaustive recursion.
  int maximum_matching(Mask p) const;

  Mask to_mask(const Graph& g, const VertexSet& s) const;
  VertexSet to_set(const Graph& g, Mask m) const;

 private:
  std::vector<Mask> adj_;
};

}  // namespace modkernel
