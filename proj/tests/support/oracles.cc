#include "oracles.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace modkernel::oracle {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  if (g.size() > 24) throw std::invalid_argument("oracle limited to 24 vertices");
  std::vector<std::uint32_t> adj(g.size(), 0);
  for (auto [u, v] : g.edges()) {
    int a = g.index_of(u), b = g.index_of(v);
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  return adj;
}

bool independent(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if ((s >> v & 1) && (adj[v] & s)) return false;
  }
  return true;
}

VertexSet to_set(const Graph& g, std::uint32_t s) {
  std::vector<Vertex> out;
  for (int v = 0; v < g.size(); ++v) {
    if (s >> v & 1) out.push_back(g.label(v));
  }
  return VertexSet(std::move(out));
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
  std::pair<int, int> find(int v) {
    int p = 0;
    while (parent[v] != v) {
      p ^= parity[v];
      v = parent[v];
    }
    return {v, p};
  }
  std::vector<int> parent;
  std::vector<int> parity;
};

}  // namespace

int alpha(const Graph& g) {
  auto adj = adjacency_masks(g);
  // independent[s] built from s minus its lowest member.
  std::vector<std::uint8_t> independent(std::size_t{1} << g.size(), 0);
  independent[0] = 1;
  int best = 0;
  for (std::uint32_t s = 1; s < (1u << g.size()); ++s) {
    const int low = __builtin_ctz(s);
    const std::uint32_t rest = s & (s - 1);
    independent[s] = independent[rest] && !(adj[low] & rest);
    if (independent[s]) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

std::vector<VertexSet> all_maximum_independent_sets(const Graph& g) {
  auto adj = adjacency_masks(g);
  const int target = alpha(g);
  std::vector<VertexSet> out;
  for (std::uint32_t s = 0; s < (1u << g.size()); ++s) {
    if (__builtin_popcount(s) == target && independent(adj, s)) out.push_back(to_set(g, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int maximum_matching(const Graph& g) {
  auto edges = g.edges();
  std::set<Vertex> used;
  auto recurse = [&](auto&& self, std::size_t i) -> int {
    if (i == edges.size()) return 0;
    int best = self(self, i + 1);
    auto [u, v] = edges[i];
    if (!used.count(u) && !used.count(v)) {
      used.insert(u);
      used.insert(v);
      best = std::max(best, 1 + self(self, i + 1));
      used.erase(u);
      used.erase(v);
    }
    return best;
  };
  return recurse(recurse, 0);
}

bool has_cycle(const Graph& g) {
  UnionFind uf(g.size());
  for (auto [u, v] : g.edges()) {
    auto [ru, pu] = uf.find(g.index_of(u));
    auto [rv, pv] = uf.find(g.index_of(v));
    if (ru == rv) return true;
    uf.parent[ru] = rv;
  }
  return false;
}

bool bipartite(const Graph& g) {
  UnionFind uf(g.size());
  for (auto [u, v] : g.edges()) {
    auto [ru, pu] = uf.find(g.index_of(u));
    auto [rv, pv] = uf.find(g.index_of(v));
    if (ru == rv) {
      if (pu == pv) return false;
      continue;
    }
    uf.parent[ru] = rv;
    uf.parity[ru] = pu ^ pv ^ 1;
  }
  return true;
}

std::optional<VertexSet> smallest_deletion_set(const Graph& g, int max_size,
                                               const std::function<bool(const Graph&)>& accept) {
  const int n = g.size();
  for (int size = 0; size <= std::min(max_size, n); ++size) {
    std::vector<VertexSet> hits;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    // prev_permutation on a descending-true mask enumerates lexicographically.
    do {
      std::vector<Vertex> s;
      for (int i = 0; i < n; ++i) {
        if (pick[i]) s.push_back(g.label(i));
      }
      VertexSet set(std::move(s));
      if (accept(remove_vertices(g, set))) hits.push_back(set);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!hits.empty()) return *std::min_element(hits.begin(), hits.end());
  }
  return std::nullopt;
}

bool is_blocking(const Graph& h, const VertexSet& y) {
  return alpha(h) > alpha(remove_vertices(h, y));
}

std::vector<VertexSet> minimal_blocking_sets(const Graph& h) {
  const int n = h.size();
  const int full = alpha(h);
  std::vector<int> after(1u << n);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    after[s] = alpha(remove_vertices(h, to_set(h, s)));
  }
  std::vector<VertexSet> out;
  for (std::uint32_t y = 1; y < (1u << n); ++y) {
    if (after[y] >= full) continue;
    bool minimal = true;
    for (std::uint32_t sub = (y - 1) & y; sub; sub = (sub - 1) & y) {
      if (after[sub] < full) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(to_set(h, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <typename Visit>
void for_each_is_point(const Graph& g, Visit visit) {
  const int n = g.size();
  std::vector<int> x(n, 0);
  auto recurse = [&](auto&& self, int v) -> void {
    if (v == n) {
      visit(x);
      return;
    }
    for (int t = 0; t <= 2; ++t) {
      bool ok = true;
      for (int w : g.adjacent_indices(v)) {
        if (w < v && x[w] + t > 2) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      x[v] = t;
      self(self, v + 1);
    }
    x[v] = 0;
  };
  recurse(recurse, 0);
}

}  // namespace

LpEnumeration lp_is_by_enumeration(const Graph& g) {
  LpEnumeration out;
  std::int64_t best = -1;
  for_each_is_point(g, [&](const std::vector<int>& x) {
    ++out.feasible_points;
    best = std::max<std::int64_t>(best, std::accumulate(x.begin(), x.end(), std::int64_t{0}));
  });
  out.optimum = Half::from_twice(best);
  return out;
}

bool larger_half_set_exists(const Graph& g, const HalfIntegralSolution& sol, Half optimum) {
  auto twice = sol.twice_values();
  bool found = false;
  for_each_is_point(g, [&](const std::vector<int>& x) {
    if (found) return;
    if (std::accumulate(x.begin(), x.end(), std::int64_t{0}) != optimum.twice()) return;
    bool superset = true, strict = false;
    for (int v = 0; v < g.size(); ++v) {
      if (twice[v] == 1 && x[v] != 1) superset = false;
      if (twice[v] != 1 && x[v] == 1) strict = true;
    }
    found = superset && strict;
  });
  return found;
}

Half lp_vc_by_double_cover(const Graph& g) {
  const int n = g.size();
  std::vector<int> match_right(n, -1);
  auto augment = [&](auto&& self, int u, std::vector<char>& seen) -> bool {
    for (int w : g.adjacent_indices(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      if (match_right[w] < 0 || self(self, match_right[w], seen)) {
        match_right[w] = u;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int u = 0; u < n; ++u) {
    std::vector<char> seen(n, 0);
    if (augment(augment, u, seen)) ++matched;
  }
  return Half::from_twice(matched);
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::set<Edge> edges;
  for (int v = 1; v < n; ++v) edges.insert({uniform(rng, 0, v - 1), v});
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.insert({u, v});
    }
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

}  // namespace modkernel::oracle
