#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace modkernel {

// Vertex label. Root graphs use labels 0..n-1; induced subgraphs keep the
// labels of their parent so sets computed in either are interchangeable.
using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free set of vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  bool is_subset_of(const VertexSet& other) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  VertexSet united(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;
  VertexSet without(const VertexSet& other) const;

  // Lexicographic on the sorted member sequence.
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Immutable simple undirected graph. Vertices are addressed by dense local
// indices 0..size()-1 internally and by labels externally; labels are kept
// in ascending order so label -> index lookup is a binary search.
class Graph {
 public:
  Graph() = default;

  // n isolated vertices labelled 0..n-1.
  explicit Graph(int n);

  // Throws InputError on self-loops, duplicate edges or ids >= n.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int size() const { return static_cast<int>(labels_.size()); }
  std::int64_t edge_count() const { return edge_count_; }

  std::span<const Vertex> labels() const { return labels_; }
  Vertex label(int index) const { return labels_[index]; }
  std::optional<int> find_index(Vertex label) const;
  // Throws InputError for labels not present in this graph.
  int index_of(Vertex label) const;
  bool has_vertex(Vertex label) const { return find_index(label).has_value(); }

  // Neighbors as local indices, ascending.
  std::span<const int> adjacent_indices(int index) const { return adj_[index]; }
  int degree(int index) const { return static_cast<int>(adj_[index].size()); }
  bool adjacent(Vertex a, Vertex b) const;

  VertexSet vertex_set() const;
  // Edges as label pairs (u < v), ascending.
  std::vector<Edge> edges() const;

  // True when labels are exactly 0..size()-1.
  bool has_dense_labels() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph induced_subgraph(const Graph& g, const VertexSet& keep);

  std::vector<Vertex> labels_;
  std::vector<std::vector<int>> adj_;
  std::int64_t edge_count_ = 0;
};

// Open neighborhood N(s); never contains members of s.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

// G[keep], labels retained. Throws InputError for labels not in g.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// G - s, labels retained. Throws InputError for labels not in g.
Graph remove_vertices(const Graph& g, const VertexSet& s);

// Ordered by smallest contained label.
std::vector<Graph> connected_components(const Graph& g);

bool is_independent_set(const Graph& g, const VertexSet& s);

bool is_acyclic(const Graph& g);

// Two-colouring by BFS; empty optional when an odd cycle exists. Colours are
// indexed by local vertex index.
std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// Same graph relabelled to 0..size()-1 preserving label order.
Graph compacted(const Graph& g);

// Disjoint union with labels of `b` shifted past those of `a`. Both inputs
// must have dense labels.
Graph disjoint_union(const Graph& a, const Graph& b);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

}  // namespace modkernel
