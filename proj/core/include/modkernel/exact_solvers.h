#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "modkernel/graph.h"
#include "modkernel/half.h"

namespace modkernel {

enum class GraphClass { kQuasiForest, kQuasiBipartite, kQuasiIntegral };

std::string_view to_string(GraphClass cls);
// "quasi-forest", "quasi-bipartite", "quasi-integral".
std::optional<GraphClass> parse_graph_class(std::string_view text);

inline constexpr int kDefaultBruteForceCap = 26;

enum class DeletionKind { kFeedbackVertexSet, kOddCycleTransversal };

// Z: a feedback vertex set or odd cycle transversal of one component.
struct DeletionSet {
  DeletionKind kind = DeletionKind::kFeedbackVertexSet;
  VertexSet vertices;
  int host = 0;

  friend bool operator==(const DeletionSet&, const DeletionSet&) = default;
};

struct MisEnumeration {
  int size = 0;
  std::vector<VertexSet> all_mis;
};

// Exact alpha and every maximum independent set. Throws RefusalError when
// the graph has more than `cap` vertices.
MisEnumeration mis_bruteforce(const Graph& g, int cap = kDefaultBruteForceCap);

// Exact alpha by branch and bound (no listing); same cap semantics.
int independence_number(const Graph& g, int cap = kDefaultBruteForceCap);

// Exact maximum matching size by exhaustive search; same cap semantics.
int maximum_matching_size(const Graph& g, int cap = kDefaultBruteForceCap);

// alpha of a forest by the two-state tree DP. Throws ContractError on cycles.
int forest_mis(const Graph& forest);

// alpha of a bipartite graph as n - MM. Throws ContractError on odd cycles.
int bipartite_mis(const Graph& g);

// Minimum-size feedback vertex set of size <= d, lexicographically smallest
// among the minimum ones; empty optional if none exists. Bounded search tree
// over shortest cycles.
std::optional<VertexSet> find_fvs(const Graph& h, int d);

// Odd cycle transversal analogue of find_fvs, by subset enumeration. Throws
// RefusalError when more than `budget` candidate subsets would be examined.
std::optional<VertexSet> find_oct(const Graph& h, int d, long long budget = 50'000'000);

// alpha(h) given a feedback vertex set z of h (h may be disconnected).
int mis_quasi_forest(const Graph& h, const DeletionSet& z);

// alpha(h) given an odd cycle transversal z of h.
int mis_quasi_bipartite(const Graph& h, const DeletionSet& z);

// alpha(h) for a component of the declared class. Quasi-integral components
// are solved by brute force under `cap`. Throws ContractError if h is not in
// the class.
int mis_component(const Graph& h, int d, GraphClass cls, int cap = kDefaultBruteForceCap);

struct ClassWitness {
  bool member = false;
  // Quasi-forest / quasi-bipartite.
  std::optional<DeletionSet> deletion_set;
  // Quasi-integral: vc(h) and LP_VC(h).
  int vc = 0;
  Half lp_vc;
};

ClassWitness recognize_class(const Graph& h, int d, GraphClass cls,
                             int cap = kDefaultBruteForceCap);

// alpha of an arbitrary induced subgraph of a graph in the class: each
// component is solved with its own deletion set (FVS and OCT are
// hereditary) or by brute force for the quasi-integral class.
int independence_number_in_class(const Graph& g, int d, GraphClass cls,
                                 int cap = kDefaultBruteForceCap);

}  // namespace modkernel
