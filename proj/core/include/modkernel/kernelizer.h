#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modkernel/exact_solvers.h"
#include "modkernel/graph.h"
#include "modkernel/half.h"
#include "modkernel/instance.h"

namespace modkernel {

struct KernelOptions {
  int cap = kDefaultBruteForceCap;
  // Worker threads for the conflict table; results do not depend on it.
  int threads = 1;
};

// alpha of induced subgraphs of G - X. Uses the class solvers for
// quasi-forest / quasi-bipartite hosts and brute force otherwise.
class AlphaSolver {
 public:
  AlphaSolver(GraphClass cls, int d, int cap = kDefaultBruteForceCap);
  static AlphaSolver brute_force(int cap = kDefaultBruteForceCap);

  int operator()(const Graph& f) const;

 private:
  AlphaSolver() = default;
  std::optional<GraphClass> cls_;
  int d_ = 0;
  int cap_ = kDefaultBruteForceCap;
};

// conf_F(X_I) = alpha(F) - alpha(F - N_G(X_I)). Throws InputError if x_i is
// not independent in g.
int conflicts(const Graph& f, const VertexSet& x_i, const Graph& g,
              const AlphaSolver& alpha = AlphaSolver::brute_force());

// X' <= x_i with |X'| <= budget and conf(h, X') > 0: a minimal blocking set
// Y' inside N(x_i) n V(h), then the smallest x_i-neighbour of each y in Y'.
// Throws ContractError if conf(h, x_i) == 0 or the result exceeds budget.
VertexSet shrink_conflict_witness(const Graph& h, const VertexSet& x_i, const Graph& g,
                                  int budget,
                                  const AlphaSolver& alpha = AlphaSolver::brute_force());

// Nonempty subsets of x that are independent in g and have at most `budget`
// members, size-ascending then lexicographic.
std::vector<VertexSet> independent_subsets(const Graph& g, const VertexSet& x, int budget);

// Per-component conflicts for every independent X_I <= X with |X_I| <= b.
struct ConflictTable {
  int budget = 0;
  std::vector<VertexSet> subsets;
  std::vector<std::vector<int>> per_component;  // [component][subset]
  std::vector<int> total;                       // [subset], sum over components
};

ConflictTable build_conflict_table(const Graph& g, const VertexSet& x,
                                   const std::vector<Graph>& components, int budget,
                                   const AlphaSolver& alpha, int threads = 1);

struct ConflictCheck {
  VertexSet x_i;
  int conf_component = 0;
  int conf_rest = 0;  // conf(G - H - X, X_I)

  friend bool operator==(const ConflictCheck&, const ConflictCheck&) = default;
};

struct Deletability {
  bool deletable = false;
  // First X_I with conf(H, X_I) > 0 and conf(G - H - X, X_I) < |X|.
  std::optional<VertexSet> certificate;
  // Every X_I with conf(H, X_I) > 0.
  std::vector<ConflictCheck> checks;
};

// Reduction Rule 1 test for one component H of G - X.
Deletability deletable_component(const Instance& inst, const Graph& h,
                                 const KernelOptions& options = {});

struct DeletionRecord {
  VertexSet component;
  int alpha_credit = 0;
  std::vector<ConflictCheck> checks;
};

struct SurvivorRecord {
  VertexSet component;
  ConflictCheck certificate;
  // Surviving components with conf(., certificate) > 0, this one included.
  int components_sharing_certificate = 0;
};

struct GapReport {
  bool solved = false;
  VertexSet cover;  // set when solved
  int vc_target = 0;
  int vc_remainder = 0;  // vc(G - X)
  Half lp_vc;
  Half gap;
  std::int64_t bound = 0;          // |X| + d |X|^(2d+3)
  std::int64_t audited_bound = 0;  // |X| + d * (#components of G - X)
  bool bound_respected = true;
};

struct KernelReport {
  GraphClass cls = GraphClass::kQuasiForest;
  int d = 0;
  int budget = 0;
  std::string status = "reduced";  // reduced | trivially-yes | solved
  int n_before = 0;
  int n_after = 0;
  int k_before = 0;
  int k_after = 0;
  int components_before = 0;
  int components_after = 0;
  std::int64_t component_bound = 0;  // |X|^(b+1)
  std::vector<DeletionRecord> deleted_components;
  std::vector<SurvivorRecord> surviving_components;
  int modulator_before = 0;
  int modulator_after = 0;
  std::int64_t modulator_bound = 0;  // d |X|^(b+1) + |X|
  VertexSet added_to_modulator;
  std::optional<GapReport> above_lp_gap;
  std::vector<Vertex> label_map;  // reduced vertex i -> input label

  struct Checks {
    bool component_bound = true;
    bool certificate_audit = true;
    bool modulator_bound = true;
    bool remainder_in_target_class = true;
    bool gap_bound = true;
  } checks;

  bool all_checks_pass() const;
};

// Saturates at INT64_MAX.
std::int64_t saturating_power(std::int64_t base, int exponent);

struct Rule1Step {
  Instance reduced;
  DeletionRecord record;
};

// Deletes the lowest-indexed deletable component, if any.
std::optional<Rule1Step> apply_rule1_once(const Instance& inst, const KernelOptions& options = {});

// Rule 1 until no component is deletable. The returned k may be <= 0; the
// report carries the survivor certificates and the component-bound audit.
std::pair<Instance, KernelReport> apply_rule1_exhaustively(const Instance& inst,
                                                           const KernelOptions& options = {});

struct ModulatorExtension {
  Instance instance;
  VertexSet added;
  bool applied = false;
  std::string notice;
};

// Adds a minimum FVS (quasi-forest) or OCT (quasi-bipartite) of every
// component of G - X to X; the result has d = 0. No-op for quasi-integral.
ModulatorExtension extend_modulator(const Instance& inst);

// k~ - LP_VC(G~) with VC target k~ = n - k, or the explicit cover of size
// <= k~ when k~ >= vc(G~ - X) + |X|.
GapReport above_lp_gap(const Instance& inst, int cap = kDefaultBruteForceCap);

struct KernelResult {
  Instance reduced;
  KernelReport report;
};

// Rule 1 exhaustively, then modulator extension (forest / bipartite) or the
// above-LP hand-off (integral). The reduced instance is relabeled densely.
KernelResult kernelize(const Instance& inst, const KernelOptions& options = {});

// Exact alpha(G) by enumerating independent subsets of X.
int alpha_with_modulator(const Instance& inst, int cap = kDefaultBruteForceCap);

}  // namespace modkernel
