#include "modkernel/exact_solvers.h"

#include <algorithm>
#include <queue>
#include <string>

#include "modkernel/errors.h"
#include "modkernel/lp_relax.h"
#include "modkernel/mask_graph.h"
#include "modkernel/matching.h"

namespace modkernel {

std::string_view to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::kQuasiForest:
      return "quasi-forest";
    case GraphClass::kQuasiBipartite:
      return "quasi-bipartite";
    case GraphClass::kQuasiIntegral:
      return "quasi-integral";
  }
  return "unknown";
}

std::optional<GraphClass> parse_graph_class(std::string_view text) {
  if (text == "quasi-forest") return GraphClass::kQuasiForest;
  if (text == "quasi-bipartite") return GraphClass::kQuasiBipartite;
  if (text == "quasi-integral") return GraphClass::kQuasiIntegral;
  return std::nullopt;
}

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.size() > cap || g.size() > 64) {
    throw RefusalError(std::string(what) + ": " + std::to_string(g.size()) +
                       " vertices exceed the brute-force cap of " +
                       std::to_string(std::min(cap, 64)));
  }
}

}  // namespace

MisEnumeration mis_bruteforce(const Graph& g, int cap) {
  check_cap(g, cap, "mis_bruteforce");
  MaskGraph mg(g);
  MisEnumeration out;
  out.size = mg.independence_number(mg.all());
  for (Mask m : mg.maximum_independent_sets(mg.all())) out.all_mis.push_back(mg.to_set(g, m));
  std::sort(out.all_mis.begin(), out.all_mis.end());
  return out;
}

int independence_number(const Graph& g, int cap) {
  check_cap(g, cap, "independence_number");
  MaskGraph mg(g);
  return mg.independence_number(mg.all());
}

int maximum_matching_size(const Graph& g, int cap) {
  check_cap(g, cap, "maximum_matching_size");
  MaskGraph mg(g);
  return mg.maximum_matching(mg.all());
}

int forest_mis(const Graph& forest) {
  if (!is_acyclic(forest)) throw ContractError("forest_mis called on a graph with a cycle");
  const int n = forest.size();
  std::vector<int> parent(n, -1);
  std::vector<int> order;
  std::vector<bool> seen(n, false);
  order.reserve(n);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : forest.adjacent_indices(v)) {
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          stack.push_back(w);
        }
      }
    }
  }
  // in[v] / out[v]: best in the subtree of v with v taken / not taken.
  std::vector<int> in(n, 1), out(n, 0);
  int total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (parent[v] >= 0) {
      in[parent[v]] += out[v];
      out[parent[v]] += std::max(in[v], out[v]);
    } else {
      total += std::max(in[v], out[v]);
    }
  }
  return total;
}

int bipartite_mis(const Graph& g) {
  auto colour = bipartition(g);
  if (!colour) throw ContractError("bipartite_mis called on a non-bipartite graph");
  std::vector<int> side_index(g.size());
  int left = 0, right = 0;
  for (int v = 0; v < g.size(); ++v) side_index[v] = (*colour)[v] == 0 ? left++ : right++;
  std::vector<std::vector<int>> adjacency(left);
  for (int v = 0; v < g.size(); ++v) {
    if ((*colour)[v] != 0) continue;
    for (int w : g.adjacent_indices(v)) adjacency[side_index[v]].push_back(side_index[w]);
  }
  BipartiteMatching matching(right, std::move(adjacency));
  return g.size() - matching.size();
}

namespace {

// Vertices of some cycle of g - removed (a union of two BFS tree paths closed
// by a non-tree edge; every FVS must hit it). Empty when acyclic. Among all
// BFS roots the smallest such union is returned.
std::vector<int> short_cycle(const Graph& g, const std::vector<bool>& removed) {
  const int n = g.size();
  std::vector<int> best;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    if (removed[root]) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<int> queue;
    queue.push(root);
    bool found = false;
    while (!queue.empty() && !found) {
      int u = queue.front();
      queue.pop();
      for (int w : g.adjacent_indices(u)) {
        if (removed[w] || w == parent[u]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
          continue;
        }
        std::vector<int> cycle;
        for (int a = u; a >= 0; a = parent[a]) cycle.push_back(a);
        for (int b = w; b >= 0; b = parent[b]) cycle.push_back(b);
        std::sort(cycle.begin(), cycle.end());
        cycle.erase(std::unique(cycle.begin(), cycle.end()), cycle.end());
        if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
        found = true;
        break;
      }
    }
    if (best.size() == 3) break;
  }
  return best;
}

// Is there an FVS of size <= budget inside {v : v > bound} of g - removed?
bool fvs_search(const Graph& g, std::vector<bool>& removed, int budget, int bound) {
  std::vector<int> cycle = short_cycle(g, removed);
  if (cycle.empty()) return true;
  if (budget == 0) return false;
  for (int v : cycle) {
    if (v <= bound) continue;
    removed[v] = true;
    bool ok = fvs_search(g, removed, budget - 1, bound);
    removed[v] = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::optional<VertexSet> find_fvs(const Graph& h, int d) {
  const int n = h.size();
  std::vector<bool> removed(n, false);
  int size = -1;
  for (int s = 0; s <= d; ++s) {
    if (fvs_search(h, removed, s, -1)) {
      size = s;
      break;
    }
  }
  if (size < 0) return std::nullopt;

  // Greedy lexicographic minimisation: fix the smallest possible next vertex.
  std::vector<Vertex> chosen;
  int last = -1;
  for (int pos = 0; pos < size; ++pos) {
    for (int v = last + 1; v < n; ++v) {
      removed[v] = true;
      if (fvs_search(h, removed, size - pos - 1, v)) {
        chosen.push_back(h.label(v));
        last = v;
        break;
      }
      removed[v] = false;
    }
  }
  return VertexSet(std::move(chosen));
}

std::optional<VertexSet> find_oct(const Graph& h, int d, long long budget) {
  const int n = h.size();
  long long candidates = 0;
  long long binom = 1;
  for (int s = 0; s <= std::min(d, n); ++s) {
    if (s > 0) binom = binom * (n - s + 1) / s;
    candidates += binom;
    if (candidates > budget) {
      throw RefusalError("find_oct would examine more than " + std::to_string(budget) +
                         " subsets");
    }
  }
  for (int s = 0; s <= std::min(d, n); ++s) {
    std::vector<int> pick(s);
    for (int i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      std::vector<Vertex> labels;
      for (int i : pick) labels.push_back(h.label(i));
      VertexSet candidate(std::move(labels));
      if (is_bipartite(remove_vertices(h, candidate))) return candidate;
      // Next combination in lexicographic order.
      int i = s - 1;
      while (i >= 0 && pick[i] == n - s + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

namespace {

template <typename SolveRest>
int mis_over_deletion_set(const Graph& h, const VertexSet& z, SolveRest solve_rest) {
  const auto& zs = z.members();
  if (zs.size() > 30) throw RefusalError("deletion set too large to enumerate");
  Graph without_z = remove_vertices(h, z);
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << zs.size()); ++mask) {
    std::vector<Vertex> picked;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      if (mask >> i & 1) picked.push_back(zs[i]);
    }
    VertexSet s(std::move(picked));
    if (!is_independent_set(h, s)) continue;
    VertexSet blocked = neighborhood(h, s).without(z);
    Graph rest = remove_vertices(without_z, blocked);
    best = std::max(best, static_cast<int>(s.size()) + solve_rest(rest));
  }
  return best;
}

void check_deletion_set(const Graph& h, const DeletionSet& z, DeletionKind kind) {
  if (z.kind != kind) throw ContractError("deletion set has the wrong kind");
  for (Vertex v : z.vertices) {
    if (!h.has_vertex(v)) throw ContractError("deletion set vertex outside the graph");
  }
}

}  // namespace

int mis_quasi_forest(const Graph& h, const DeletionSet& z) {
  check_deletion_set(h, z, DeletionKind::kFeedbackVertexSet);
  if (!is_acyclic(remove_vertices(h, z.vertices))) {
    throw ContractError("mis_quasi_forest: z is not a feedback vertex set");
  }
  return mis_over_deletion_set(h, z.vertices, forest_mis);
}

int mis_quasi_bipartite(const Graph& h, const DeletionSet& z) {
  check_deletion_set(h, z, DeletionKind::kOddCycleTransversal);
  if (!is_bipartite(remove_vertices(h, z.vertices))) {
    throw ContractError("mis_quasi_bipartite: z is not an odd cycle transversal");
  }
  return mis_over_deletion_set(h, z.vertices, bipartite_mis);
}

ClassWitness recognize_class(const Graph& h, int d, GraphClass cls, int cap) {
  ClassWitness w;
  switch (cls) {
    case GraphClass::kQuasiForest:
      if (auto z = find_fvs(h, d)) {
        w.member = true;
        w.deletion_set = DeletionSet{DeletionKind::kFeedbackVertexSet, *z, 0};
      }
      break;
    case GraphClass::kQuasiBipartite:
      if (auto z = find_oct(h, d)) {
        w.member = true;
        w.deletion_set = DeletionSet{DeletionKind::kOddCycleTransversal, *z, 0};
      }
      break;
    case GraphClass::kQuasiIntegral:
      w.vc = h.size() - independence_number(h, cap);
      w.lp_vc = lp_vc_opt(h).value();
      w.member = Half::from_int(w.vc) <= w.lp_vc + Half::from_int(d);
      break;
  }
  return w;
}

int mis_component(const Graph& h, int d, GraphClass cls, int cap) {
  switch (cls) {
    case GraphClass::kQuasiForest: {
      auto z = find_fvs(h, d);
      if (!z) throw ContractError("component is not a " + std::to_string(d) + "-quasi-forest");
      return mis_quasi_forest(h, {DeletionKind::kFeedbackVertexSet, *z, 0});
    }
    case GraphClass::kQuasiBipartite: {
      auto z = find_oct(h, d);
      if (!z) throw ContractError("component is not " + std::to_string(d) + "-quasi-bipartite");
      return mis_quasi_bipartite(h, {DeletionKind::kOddCycleTransversal, *z, 0});
    }
    case GraphClass::kQuasiIntegral: {
      int alpha = independence_number(h, cap);
      Half vc = Half::from_int(h.size() - alpha);
      if (vc > lp_vc_opt(h).value() + Half::from_int(d)) {
        throw ContractError("component is not " + std::to_string(d) + "-quasi-integral");
      }
      return alpha;
    }
  }
  return 0;
}

int independence_number_in_class(const Graph& g, int d, GraphClass cls, int cap) {
  int total = 0;
  for (const Graph& c : connected_components(g)) {
    if (c.size() <= 2) {
      total += 1;
      continue;
    }
    if (cls == GraphClass::kQuasiIntegral) {
      total += independence_number(c, cap);
    } else {
      total += mis_component(c, d, cls, cap);
    }
  }
  return total;
}

}  // namespace modkernel
