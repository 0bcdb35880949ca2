#include "modkernel/lp_relax.h"

#include <algorithm>
#include <string>

#include "modkernel/errors.h"
#include "modkernel/matching.h"

namespace modkernel {

HalfIntegralSolution::HalfIntegralSolution(LpSense sense, std::vector<Vertex> labels,
                                           std::vector<std::uint8_t> twice_values)
    : sense_(sense), labels_(std::move(labels)), twice_(std::move(twice_values)) {
  if (labels_.size() != twice_.size()) {
    throw InputError("solution labels and values differ in length");
  }
  for (std::size_t i = 0; i < twice_.size(); ++i) {
    if (twice_[i] > 2) throw InputError("solution value outside {0, 1/2, 1}");
    if (i > 0 && labels_[i - 1] >= labels_[i]) {
      throw InputError("solution labels must be strictly ascending");
    }
  }
}

Half HalfIntegralSolution::value() const {
  std::int64_t twice = 0;
  for (auto t : twice_) twice += t;
  return Half::from_twice(twice);
}

Half HalfIntegralSolution::value_of(Vertex v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) {
    throw InputError("vertex " + std::to_string(v) + " has no LP value");
  }
  return Half::from_twice(twice_[it - labels_.begin()]);
}

VertexSet HalfIntegralSolution::part(std::uint8_t twice) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (twice_[i] == twice) out.push_back(labels_[i]);
  }
  return VertexSet(std::move(out));
}

HalfIntegralSolution HalfIntegralSolution::with_half(const VertexSet& s) const {
  HalfIntegralSolution out = *this;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (s.contains(labels_[i])) out.twice_[i] = 1;
  }
  return out;
}

namespace {

bool same_vertices(const Graph& g, const HalfIntegralSolution& sol) {
  auto labels = sol.labels();
  return std::equal(labels.begin(), labels.end(), g.labels().begin(), g.labels().end());
}

}  // namespace

bool is_feasible(const Graph& g, const HalfIntegralSolution& sol) {
  if (!same_vertices(g, sol)) return false;
  auto x = sol.twice_values();
  for (int u = 0; u < g.size(); ++u) {
    for (int v : g.adjacent_indices(u)) {
      int sum = x[u] + x[v];
      if (sol.sense() == LpSense::kVertexCover ? sum < 2 : sum > 2) return false;
    }
  }
  return true;
}

HalfIntegralSolution lp_vc_opt(const Graph& g) {
  std::vector<std::vector<int>> left(g.size());
  for (int v = 0; v < g.size(); ++v) {
    auto nb = g.adjacent_indices(v);
    left[v].assign(nb.begin(), nb.end());
  }
  BipartiteMatching matching(g.size(), std::move(left));
  auto cover = matching.minimum_vertex_cover();
  std::vector<std::uint8_t> twice(g.size());
  for (int v = 0; v < g.size(); ++v) {
    twice[v] = static_cast<std::uint8_t>(cover.left[v]) + static_cast<std::uint8_t>(cover.right[v]);
  }
  auto labels = g.labels();
  return HalfIntegralSolution(LpSense::kVertexCover,
                              std::vector<Vertex>(labels.begin(), labels.end()),
                              std::move(twice));
}

HalfIntegralSolution lp_is_from_vc(const HalfIntegralSolution& sol) {
  if (sol.sense() != LpSense::kVertexCover) {
    throw InputError("lp_is_from_vc expects a vertex cover solution");
  }
  std::vector<std::uint8_t> twice(sol.twice_values().begin(), sol.twice_values().end());
  for (auto& t : twice) t = static_cast<std::uint8_t>(2 - t);
  auto labels = sol.labels();
  return HalfIntegralSolution(LpSense::kIndependentSet,
                              std::vector<Vertex>(labels.begin(), labels.end()),
                              std::move(twice));
}

Half lp_is_value(const Graph& g) {
  return Half::from_int(g.size()) - lp_vc_opt(g).value();
}

namespace {

void require_optimal_is(const Graph& g, const HalfIntegralSolution& sol) {
  if (sol.sense() != LpSense::kIndependentSet || !is_feasible(g, sol)) {
    throw ContractError("surplus_violator needs a feasible LP_IS solution of the graph");
  }
  if (sol.value() != lp_is_value(g)) {
    throw ContractError("surplus_violator needs an optimum LP_IS solution; got value " +
                        sol.value().to_string() + ", optimum is " +
                        lp_is_value(g).to_string());
  }
}

}  // namespace

std::optional<VertexSet> surplus_violator(const Graph& g, const HalfIntegralSolution& sol) {
  require_optimal_is(g, sol);
  auto x = sol.twice_values();
  std::vector<int> zeros;
  std::vector<int> right_id(g.size(), -1);
  int right_count = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (x[v] == 0) zeros.push_back(v);
    if (x[v] == 2) right_id[v] = right_count++;
  }
  if (zeros.empty()) return std::nullopt;

  std::vector<std::vector<int>> base(zeros.size());
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    for (int w : g.adjacent_indices(zeros[i])) {
      if (right_id[w] >= 0) base[i].push_back(right_id[w]);
    }
  }
  // Left side: the V0 vertices followed by a copy of the probed vertex.
  for (std::size_t probe = 0; probe < zeros.size(); ++probe) {
    auto adjacency = base;
    adjacency.push_back(base[probe]);
    BipartiteMatching matching(right_count, std::move(adjacency));
    if (matching.size() == static_cast<int>(zeros.size()) + 1) continue;

    int root = -1;
    for (int l = 0; l < matching.left_size(); ++l) {
      if (matching.match_of_left(l) < 0) {
        root = l;
        break;
      }
    }
    auto reach = matching.alternating_reachable_from(root);
    std::vector<Vertex> violator;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      if (reach.left[i] || (reach.left.back() && i == probe)) {
        violator.push_back(g.label(zeros[i]));
      }
    }
    return VertexSet(std::move(violator));
  }
  return std::nullopt;
}

std::optional<VertexSet> surplus_violator_by_enumeration(const Graph& g,
                                                         const HalfIntegralSolution& sol,
                                                         int max_zeros) {
  require_optimal_is(g, sol);
  auto x = sol.twice_values();
  std::vector<int> zeros;
  for (int v = 0; v < g.size(); ++v) {
    if (x[v] == 0) zeros.push_back(v);
  }
  if (static_cast<int>(zeros.size()) > max_zeros) {
    throw RefusalError("surplus enumeration over " + std::to_string(zeros.size()) +
                       " zero vertices exceeds the cap of " + std::to_string(max_zeros));
  }
  const std::uint64_t limit = std::uint64_t{1} << zeros.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    std::vector<bool> hit(g.size(), false);
    int subset_size = 0;
    int ones_hit = 0;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      ++subset_size;
      for (int w : g.adjacent_indices(zeros[i])) {
        if (x[w] == 2 && !hit[w]) {
          hit[w] = true;
          ++ones_hit;
        }
      }
    }
    if (ones_hit <= subset_size) {
      std::vector<Vertex> out;
      for (std::size_t i = 0; i < zeros.size(); ++i) {
        if (mask >> i & 1) out.push_back(g.label(zeros[i]));
      }
      return VertexSet(std::move(out));
    }
  }
  return std::nullopt;
}

HalfIntegralSolution extremal_lp_is(const Graph& g) {
  HalfIntegralSolution sol = lp_is_from_vc(lp_vc_opt(g));
  // Each flip strictly grows V_1/2, so this runs at most n times.
  while (auto violator = surplus_violator(g, sol)) {
    VertexSet flip = neighborhood(g, *violator).intersected(sol.ones()).united(*violator);
    sol = sol.with_half(flip);
  }
  return sol;
}

}  // namespace modkernel
