#pragma once

#include <vector>

#include "modkernel/exact_solvers.h"
#include "modkernel/graph.h"

namespace modkernel {

// Y is a blocking set of H when alpha(H) > alpha(H - Y); minimal when no
// proper subset of Y blocks.
struct BlockingSetReport {
  Graph host;
  std::vector<VertexSet> minimal_sets;  // size-ascending, then lexicographic
  int max_minimal_size = 0;
  int class_bound = 0;
  bool bound_respected = true;
};

// d+2 for quasi-forest / quasi-bipartite, 2d+2 for quasi-integral.
int class_budget(GraphClass cls, int d);

bool is_blocking_set(const Graph& h, const VertexSet& y, int cap = kDefaultBruteForceCap);

// Checks only the |y| subsets of size |y|-1. Sound because blocking is
// monotone under supersets.
bool is_minimal_blocking_set(const Graph& h, const VertexSet& y,
                             int cap = kDefaultBruteForceCap);

// Checks every proper subset; reference for the shortcut above.
bool is_minimal_blocking_set_exhaustive(const Graph& h, const VertexSet& y,
                                        int cap = kDefaultBruteForceCap);

// All minimal blocking sets of h from a table of alpha(H - Y) over every Y.
// Needs |V(h)| <= min(cap, 30).
BlockingSetReport enumerate_minimal_blocking_sets(const Graph& h, int class_bound,
                                                  int cap = kDefaultBruteForceCap);

// Shrinks a blocking set y of h to a minimal one by dropping vertices in
// ascending order while the remainder still blocks. `alpha` must compute
// alpha of induced subgraphs of h.
template <typename AlphaFn>
VertexSet shrink_to_minimal_blocking_set(const Graph& h, const VertexSet& y, AlphaFn&& alpha) {
  const int full = alpha(h);
  std::vector<Vertex> kept(y.begin(), y.end());
  for (Vertex v : y) {
    std::vector<Vertex> trial;
    for (Vertex u : kept) {
      if (u != v) trial.push_back(u);
    }
    if (alpha(remove_vertices(h, VertexSet(trial))) < full) kept = std::move(trial);
  }
  return VertexSet(std::move(kept));
}

}  // namespace modkernel
