#pragma once

#include <string>

#include "modkernel/exact_solvers.h"
#include "modkernel/graph.h"

namespace modkernel {

// (G, X, k) of Independent Set parameterized by a modulator X to the
// d-quasi class `cls`. k is the independent-set target.
struct Instance {
  Graph graph;
  VertexSet modulator;
  int k = 0;
  int d = 0;
  GraphClass cls = GraphClass::kQuasiForest;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Checks X <= V(G), 0 <= k <= n, d >= 0 and that every component of G - X is
// in the declared class. Throws InputError naming the offending component.
void validate_instance(const Instance& inst, int cap = kDefaultBruteForceCap);

// Relabels the graph to 0..n-1 (label order preserved) and maps X along.
Instance compacted(const Instance& inst);

}  // namespace modkernel
