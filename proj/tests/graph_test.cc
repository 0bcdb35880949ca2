#include <gtest/gtest.h>

#include <random>

#include "modkernel/errors.h"
#include "modkernel/graph.h"
#include "oracles.h"

namespace modkernel {
namespace {

TEST(Neighborhood, CenterOfPath) {
  EXPECT_EQ(neighborhood(path_graph(3), {1}), (VertexSet{0, 2}));
}

TEST(Neighborhood, EndpointsOfPath) {
  EXPECT_EQ(neighborhood(path_graph(3), {0, 2}), (VertexSet{1}));
}

TEST(Neighborhood, EmptySet) {
  EXPECT_TRUE(neighborhood(complete_graph(4), {}).empty());
  EXPECT_TRUE(neighborhood(Graph(0), {}).empty());
}

TEST(Neighborhood, UnknownVertexIsInputError) {
  EXPECT_THROW(neighborhood(path_graph(3), {7}), InputError);
}

TEST(RemoveVertices, PathCenter) {
  Graph g = remove_vertices(path_graph(3), {1});
  EXPECT_EQ(g.vertex_set(), (VertexSet{0, 2}));
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(RemoveVertices, CliqueMinusOneIsTriangle) {
  Graph g = remove_vertices(complete_graph(4), {0});
  EXPECT_EQ(g.vertex_set(), (VertexSet{1, 2, 3}));
  EXPECT_EQ(compacted(g), complete_graph(3));
}

TEST(RemoveVertices, CycleOpposite) {
  Graph g = remove_vertices(cycle_graph(4), {0, 2});
  EXPECT_EQ(g.vertex_set(), (VertexSet{1, 3}));
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(RemoveVertices, UnknownVertexIsInputError) {
  EXPECT_THROW(remove_vertices(path_graph(3), {3}), InputError);
}

TEST(ConnectedComponents, PathIsOneComponent) {
  auto parts = connected_components(path_graph(3));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0], path_graph(3));
}

TEST(ConnectedComponents, IsolatedPair) {
  auto parts = connected_components(remove_vertices(path_graph(3), {1}));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].vertex_set(), (VertexSet{0}));
  EXPECT_EQ(parts[1].vertex_set(), (VertexSet{2}));
}

TEST(ConnectedComponents, TriangleAndClique) {
  auto parts = connected_components(disjoint_union(complete_graph(3), complete_graph(4)));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].vertex_set(), (VertexSet{0, 1, 2}));
  EXPECT_EQ(compacted(parts[0]), complete_graph(3));
  EXPECT_EQ(compacted(parts[1]), complete_graph(4));
}

TEST(IndependentSet, Examples) {
  EXPECT_FALSE(is_independent_set(complete_graph(3), {0, 1}));
  EXPECT_TRUE(is_independent_set(path_graph(3), {0, 2}));
  EXPECT_TRUE(is_independent_set(complete_graph(5), {}));
}

TEST(GraphConstruction, RejectsMalformedEdges) {
  std::vector<Edge> loop{{1, 1}};
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  std::vector<Edge> range{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, loop), InputError);
  EXPECT_THROW(Graph::from_edges(3, dup), InputError);
  EXPECT_THROW(Graph::from_edges(3, range), InputError);
}

TEST(GraphConstruction, AdjacencyIsSymmetric) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(oracle::uniform(rng, 1, 12), 0.4, rng);
    for (int v = 0; v < g.size(); ++v) {
      for (int w : g.adjacent_indices(v)) EXPECT_TRUE(g.adjacent(g.label(w), g.label(v)));
    }
  }
}

TEST(StructureChecks, AgreeWithUnionFind) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(oracle::uniform(rng, 1, 12), 0.25, rng);
    EXPECT_EQ(is_acyclic(g), !oracle::has_cycle(g));
    EXPECT_EQ(is_bipartite(g), oracle::bipartite(g));
  }
}

class GraphProperties : public ::testing::TestWithParam<int> {};

TEST_P(GraphProperties, NeighborhoodExcludesSet) {
  std::mt19937_64 rng(GetParam());
  Graph g = oracle::random_graph(oracle::uniform(rng, 1, 14), 0.3, rng);
  std::vector<Vertex> pick;
  for (Vertex v : g.labels()) {
    if (rng() % 3 == 0) pick.push_back(v);
  }
  VertexSet s(pick);
  EXPECT_TRUE(neighborhood(g, s).intersected(s).empty());
  for (Vertex u : neighborhood(g, s)) {
    bool touches = false;
    for (Vertex v : s) touches = touches || g.adjacent(u, v);
    EXPECT_TRUE(touches);
  }
}

TEST_P(GraphProperties, RemovalComposes) {
  std::mt19937_64 rng(GetParam() + 1000);
  Graph g = oracle::random_graph(oracle::uniform(rng, 2, 14), 0.3, rng);
  std::vector<Vertex> a, b;
  for (Vertex v : g.labels()) {
    int r = static_cast<int>(rng() % 4);
    if (r == 0) a.push_back(v);
    if (r == 1) b.push_back(v);
  }
  VertexSet sa(a), sb(b);
  EXPECT_EQ(remove_vertices(remove_vertices(g, sa), sb), remove_vertices(g, sa.united(sb)));
}

TEST_P(GraphProperties, ComponentsPartitionAndAreNonAdjacent) {
  std::mt19937_64 rng(GetParam() + 2000);
  Graph g = oracle::random_graph(oracle::uniform(rng, 0, 16), 0.12, rng);
  auto parts = connected_components(g);
  int total = 0;
  VertexSet seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    total += parts[i].size();
    EXPECT_TRUE(seen.intersected(parts[i].vertex_set()).empty());
    seen = seen.united(parts[i].vertex_set());
    if (i > 0) EXPECT_LT(parts[i - 1].label(0), parts[i].label(0));
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (Vertex u : parts[i].labels()) {
        for (Vertex v : parts[j].labels()) EXPECT_FALSE(g.adjacent(u, v));
      }
    }
  }
  EXPECT_EQ(total, g.size());
}

INSTANTIATE_TEST_SUITE_P(Seeds, GraphProperties, ::testing::Range(0, 40));

}  // namespace
}  // namespace modkernel
