#include <gtest/gtest.h>

#include <random>

#include "modkernel/errors.h"
#include "modkernel/exact_solvers.h"
#include "modkernel/generator.h"
#include "oracles.h"

namespace modkernel {
namespace {

DeletionSet fvs(VertexSet z) { return {DeletionKind::kFeedbackVertexSet, std::move(z), 0}; }
DeletionSet oct(VertexSet z) { return {DeletionKind::kOddCycleTransversal, std::move(z), 0}; }

Graph random_tree(int n, std::mt19937_64& rng) { return oracle::random_connected_graph(n, 0.0, rng); }

TEST(MisBruteforce, Clique) {
  auto r = mis_bruteforce(complete_graph(5));
  EXPECT_EQ(r.size, 1);
  EXPECT_EQ(r.all_mis, (std::vector<VertexSet>{{0}, {1}, {2}, {3}, {4}}));
}

TEST(MisBruteforce, PathOfThree) {
  auto r = mis_bruteforce(path_graph(3));
  EXPECT_EQ(r.size, 2);
  EXPECT_EQ(r.all_mis, oracle::all_maximum_independent_sets(path_graph(3)));
  EXPECT_EQ(r.all_mis, (std::vector<VertexSet>{{0, 2}}));
}

TEST(MisBruteforce, EdgelessGraph) {
  auto r = mis_bruteforce(Graph(3));
  EXPECT_EQ(r.size, 3);
  EXPECT_EQ(r.all_mis, (std::vector<VertexSet>{{0, 1, 2}}));
}

TEST(MisBruteforce, CapIsRefusal) {
  EXPECT_THROW(mis_bruteforce(Graph(12), 10), RefusalError);
}

TEST(FindFvs, TreeNeedsNothing) {
  std::mt19937_64 rng(1);
  auto z = find_fvs(random_tree(9, rng), 0);
  ASSERT_TRUE(z);
  EXPECT_TRUE(z->empty());
}

TEST(FindFvs, TriangleNeedsOne) {
  auto z = find_fvs(complete_graph(3), 1);
  ASSERT_TRUE(z);
  EXPECT_EQ(z->size(), 1u);
  EXPECT_TRUE(is_acyclic(remove_vertices(complete_graph(3), *z)));
}

TEST(FindFvs, CliqueOfFourExceedsOne) {
  EXPECT_FALSE(find_fvs(complete_graph(4), 1));
  EXPECT_FALSE(oracle::smallest_deletion_set(complete_graph(4), 1,
                                             [](const Graph& g) { return !oracle::has_cycle(g); }));
}

TEST(FindOct, BipartiteNeedsNothing) {
  auto z = find_oct(cycle_graph(6), 0);
  ASSERT_TRUE(z);
  EXPECT_TRUE(z->empty());
}

TEST(FindOct, TriangleNeedsOne) {
  auto z = find_oct(complete_graph(3), 1);
  ASSERT_TRUE(z);
  EXPECT_EQ(z->size(), 1u);
}

TEST(FindOct, CliqueOfFour) {
  EXPECT_FALSE(find_oct(complete_graph(4), 1));
  auto z = find_oct(complete_graph(4), 2);
  ASSERT_TRUE(z);
  EXPECT_EQ(z->size(), 2u);
  Graph rest = remove_vertices(complete_graph(4), *z);
  EXPECT_EQ(rest.size(), 2);
  EXPECT_EQ(rest.edge_count(), 1);
}

TEST(MisQuasiForest, Examples) {
  EXPECT_EQ(mis_quasi_forest(complete_graph(3), fvs({0})), 1);
  EXPECT_EQ(mis_quasi_forest(cycle_graph(4), fvs({0})), 2);
  EXPECT_EQ(mis_quasi_forest(path_graph(5), fvs({})), 3);
  EXPECT_EQ(oracle::alpha(cycle_graph(4)), 2);
  EXPECT_EQ(oracle::alpha(path_graph(5)), 3);
}

TEST(MisQuasiForest, InvalidDeletionSetIsContractError) {
  EXPECT_THROW(mis_quasi_forest(complete_graph(4), fvs({0})), ContractError);
  EXPECT_THROW(mis_quasi_forest(complete_graph(3), oct({0})), ContractError);
}

TEST(MisQuasiBipartite, Examples) {
  EXPECT_EQ(mis_quasi_bipartite(cycle_graph(5), oct({0})), 2);
  EXPECT_EQ(mis_quasi_bipartite(complete_graph(3), oct({0})), 1);
  EXPECT_EQ(mis_quasi_bipartite(cycle_graph(6), oct({})), 3);
  EXPECT_EQ(oracle::alpha(cycle_graph(5)), 2);
  EXPECT_EQ(6 - oracle::maximum_matching(cycle_graph(6)), 3);
}

TEST(MisQuasiBipartite, InvalidDeletionSetIsContractError) {
  EXPECT_THROW(mis_quasi_bipartite(cycle_graph(5), oct({})), ContractError);
}

TEST(MisComponent, Examples) {
  EXPECT_EQ(mis_component(complete_graph(4), 1, GraphClass::kQuasiIntegral), 1);
  for (int d = 1; d <= 3; ++d) {
    EXPECT_EQ(mis_component(complete_graph(2 * d + 2), d, GraphClass::kQuasiIntegral), 1);
  }
  EXPECT_EQ(mis_component(path_graph(3), 0, GraphClass::kQuasiForest), 2);
}

TEST(MisComponent, OutsideClassIsContractError) {
  EXPECT_THROW(mis_component(complete_graph(4), 1, GraphClass::kQuasiForest), ContractError);
  EXPECT_THROW(mis_component(complete_graph(4), 0, GraphClass::kQuasiIntegral), ContractError);
}

TEST(RecognizeClass, CliqueOfFourIsQuasiIntegral) {
  auto w = recognize_class(complete_graph(4), 1, GraphClass::kQuasiIntegral);
  EXPECT_TRUE(w.member);
  EXPECT_EQ(w.vc, 3);
  EXPECT_EQ(w.lp_vc, Half::from_int(2));
}

TEST(RecognizeClass, EvenCliquesAreQuasiIntegral) {
  for (int d = 1; d <= 3; ++d) {
    auto w = recognize_class(complete_graph(2 * d + 2), d, GraphClass::kQuasiIntegral);
    EXPECT_TRUE(w.member) << "d=" << d;
    EXPECT_EQ(w.vc, 2 * d + 1);
    EXPECT_EQ(w.lp_vc, Half::from_int(d + 1));
  }
}

TEST(RecognizeClass, CliqueOfFourIsNotOneQuasiForest) {
  EXPECT_FALSE(recognize_class(complete_graph(4), 1, GraphClass::kQuasiForest).member);
}

TEST(ClassNames, RoundTrip) {
  for (auto cls : {GraphClass::kQuasiForest, GraphClass::kQuasiBipartite, GraphClass::kQuasiIntegral}) {
    EXPECT_EQ(parse_graph_class(to_string(cls)), cls);
  }
  EXPECT_FALSE(parse_graph_class("forest"));
}

class SolverProperties : public ::testing::TestWithParam<int> {};

TEST_P(SolverProperties, ClassSolversAgreeWithBruteForce) {
  std::mt19937_64 rng(GetParam());
  const int n = oracle::uniform(rng, 1, 14);
  Graph g = oracle::random_connected_graph(n, oracle::uniform(rng, 0, 3) * 0.05, rng);
  const int truth = oracle::alpha(g);
  EXPECT_EQ(mis_bruteforce(g).size, truth);
  EXPECT_EQ(mis_bruteforce(g).all_mis, oracle::all_maximum_independent_sets(g));
  EXPECT_EQ(independence_number(g), truth);
  for (int d = 0; d <= 3; ++d) {
    if (auto z = find_fvs(g, d)) {
      EXPECT_EQ(mis_quasi_forest(g, fvs(*z)), truth);
      EXPECT_EQ(mis_component(g, d, GraphClass::kQuasiForest), truth);
    }
    if (auto z = find_oct(g, d)) {
      EXPECT_EQ(mis_quasi_bipartite(g, oct(*z)), truth);
      EXPECT_EQ(mis_component(g, d, GraphClass::kQuasiBipartite), truth);
    }
    if (recognize_class(g, d, GraphClass::kQuasiIntegral).member) {
      EXPECT_EQ(mis_component(g, d, GraphClass::kQuasiIntegral), truth);
    }
  }
}

TEST_P(SolverProperties, DeletionSetsMatchOracle) {
  std::mt19937_64 rng(GetParam() + 7000);
  Graph g = oracle::random_connected_graph(oracle::uniform(rng, 1, 11), 0.12, rng);
  for (int d = 0; d <= 2; ++d) {
    auto f = find_fvs(g, d);
    auto f_ref = oracle::smallest_deletion_set(g, d, [](const Graph& h) { return !oracle::has_cycle(h); });
    EXPECT_EQ(f, f_ref) << "fvs d=" << d;
    auto o = find_oct(g, d);
    auto o_ref = oracle::smallest_deletion_set(g, d, [](const Graph& h) { return oracle::bipartite(h); });
    ASSERT_EQ(o.has_value(), o_ref.has_value()) << "oct d=" << d;
    if (o) {
      EXPECT_LE(o->size(), static_cast<std::size_t>(d));
      EXPECT_TRUE(oracle::bipartite(remove_vertices(g, *o)));
    }
  }
}

TEST_P(SolverProperties, QuasiBipartiteImpliesQuasiIntegral) {
  std::mt19937_64 rng(GetParam() + 9000);
  Graph g = oracle::random_connected_graph(oracle::uniform(rng, 2, 14), 0.15, rng);
  for (int d = 0; d <= 3; ++d) {
    if (recognize_class(g, d, GraphClass::kQuasiBipartite).member) {
      EXPECT_TRUE(recognize_class(g, d, GraphClass::kQuasiIntegral).member) << "d=" << d;
    }
  }
}

TEST_P(SolverProperties, MatchingAgreesWithOracle) {
  std::mt19937_64 rng(GetParam() + 11000);
  Graph g = oracle::random_graph(oracle::uniform(rng, 1, 10), 0.3, rng);
  EXPECT_EQ(maximum_matching_size(g), oracle::maximum_matching(g));
}

TEST_P(SolverProperties, GeneratedComponentsAreInClass) {
  SeededRng rng(GetParam());
  for (auto cls : {GraphClass::kQuasiForest, GraphClass::kQuasiBipartite, GraphClass::kQuasiIntegral}) {
    for (int d = 1; d <= 2; ++d) {
      Graph h = random_component(cls, 10, d, rng);
      EXPECT_TRUE(recognize_class(h, d, cls).member) << to_string(cls) << " d=" << d;
      EXPECT_EQ(connected_components(h).size(), 1u);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SolverProperties, ::testing::Range(0, 60));

}  // namespace
}  // namespace modkernel
