#include "modkernel/graph.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "modkernel/errors.h"

namespace modkernel {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

VertexSet VertexSet::united(const VertexSet& other) const {
  VertexSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::without(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  labels_.resize(n);
  std::iota(labels_.begin(), labels_.end(), 0);
  adj_.resize(n);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an id outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end()) {
      throw InputError("duplicate edge {" + std::to_string(v) + "," +
                       std::to_string(*dup) + "}");
    }
  }
  g.edge_count_ = static_cast<std::int64_t>(edges.size());
  return g;
}

std::optional<int> Graph::find_index(Vertex label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int Graph::index_of(Vertex label) const {
  auto idx = find_index(label);
  if (!idx) throw InputError("vertex " + std::to_string(label) + " is not in the graph");
  return *idx;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  auto ia = find_index(a);
  auto ib = find_index(b);
  if (!ia || !ib) return false;
  const auto& nb = adj_[*ia];
  return std::binary_search(nb.begin(), nb.end(), *ib);
}

VertexSet Graph::vertex_set() const { return VertexSet(labels_); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < size(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(labels_[u], labels_[v]);
    }
  }
  return out;
}

bool Graph::has_dense_labels() const {
  return labels_.empty() || labels_.back() == size() - 1;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> out;
  for (Vertex v : s) {
    for (int w : g.adjacent_indices(g.index_of(v))) {
      if (!s.contains(g.label(w))) out.push_back(g.label(w));
    }
  }
  return VertexSet(std::move(out));
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> new_index(g.size(), -1);
  Graph out;
  out.labels_.reserve(keep.size());
  for (Vertex v : keep) {
    new_index[g.index_of(v)] = static_cast<int>(out.labels_.size());
    out.labels_.push_back(v);
  }
  out.adj_.resize(out.labels_.size());
  std::int64_t twice_edges = 0;
  for (int i = 0; i < out.size(); ++i) {
    for (int w : g.adjacent_indices(g.index_of(out.labels_[i]))) {
      if (new_index[w] >= 0) out.adj_[i].push_back(new_index[w]);
    }
    twice_edges += static_cast<std::int64_t>(out.adj_[i].size());
  }
  out.edge_count_ = twice_edges / 2;
  return out;
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) g.index_of(v);
  return induced_subgraph(g, g.vertex_set().without(s));
}

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<Graph> out;
  for (int start = 0; start < g.size(); ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members;
    std::queue<int> queue;
    comp[start] = id;
    queue.push(start);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      members.push_back(g.label(v));
      for (int w : g.adjacent_indices(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          queue.push(w);
        }
      }
    }
    out.push_back(induced_subgraph(g, VertexSet(std::move(members))));
  }
  return out;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    for (int w : g.adjacent_indices(g.index_of(v))) {
      if (s.contains(g.label(w))) return false;
    }
  }
  return true;
}

bool is_acyclic(const Graph& g) {
  // A forest has exactly n - c edges.
  return g.edge_count() ==
         g.size() - static_cast<std::int64_t>(connected_components(g).size());
}

std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> colour(g.size(), kUnset);
  for (int start = 0; start < g.size(); ++start) {
    if (colour[start] != kUnset) continue;
    colour[start] = 0;
    std::queue<int> queue;
    queue.push(start);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : g.adjacent_indices(v)) {
        if (colour[w] == kUnset) {
          colour[w] = colour[v] ^ 1;
          queue.push(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

Graph compacted(const Graph& g) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(g.index_of(u), g.index_of(v));
  return Graph::from_edges(g.size(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (!a.has_dense_labels() || !b.has_dense_labels()) {
    throw InputError("disjoint_union requires dense labels");
  }
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.size(), v + a.size());
  return Graph::from_edges(a.size() + b.size(), edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("a cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

}  // namespace modkernel
